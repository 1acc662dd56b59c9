"""Independent cross-checks used to freeze expected values in the tests.

The ring-index oracle computes [Lambda_k : M cap Lambda_k] as
[Lambda_k + M : M] (second isomorphism), via a sum lattice and Smith
invariant factors, with a Bareiss determinant cross-check.  The library
path intersects first and divides Hermite diagonals, so the two agree
only if both compositions are right.

The matrix-group oracle counts |SL2| over tiny fields by direct
enumeration of quadruples.
"""

from fractions import Fraction
from math import gcd

from sgen2 import linalg
from sgen2.sunits import LevelFiltration, s_unit_basis


def level_rows(field, sbasis, k):
    filt = LevelFiltration(field, sbasis)
    return filt.level(k).frac_rows()


def coset_index(field, sbasis, gens, k):
    """[Lambda_k : span(gens) cap Lambda_k] or None if infinite."""
    lam = level_rows(field, sbasis, k)
    grows = [list(g.ib_coords()) for g in gens]
    den = 1
    for r in lam + grows:
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
    lam_i = [[int(x * den) for x in r] for r in lam]
    g_i = [[int(x * den) for x in r] for r in grows]
    union = linalg.hnf(lam_i + g_i)
    coords = []
    for r in g_i:
        c = linalg.solve_hnf(union, r)
        assert c is not None
        coords.append(c)
    n = len(union)
    inv = linalg.snf_invariants(coords)
    inv = [v for v in inv if v]
    if len(inv) < n:
        return None
    idx = 1
    for v in inv:
        idx *= v
    # cross-check: the index is also |det| of any n independent coord rows
    square = linalg.hnf(coords)
    if len(square) == n:
        assert abs(linalg.int_det(square)) == idx
    return idx


def zalpha_levels(field, S, alpha, n, kmax, extra_gens=()):
    """Per-level indices [Lambda_k : M_J cap Lambda_k] with J = k + 2,
    computed entirely through the oracle route."""
    sbasis = s_unit_basis(field, S)
    out = []
    for k in range(kmax + 1):
        J = k + 2
        a = alpha ** n
        pows = [field.one]
        for _ in range(J):
            pows.append(pows[-1] * a)
        gens = list(pows)
        for g in extra_gens:
            gens.extend(g * p for p in pows)
        out.append(coset_index(field, sbasis, gens, k))
    return out


# ---------------------------------------------------------------------------
# |SL2| over tiny fields by raw enumeration.

def sl2_order_prime(p):
    count = 0
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        count += 1
    return count


def _gf_elements(p, red):
    """Pairs (x, y) = x + y*t in F_p[t]/(t^2 + red[1] t + red[0])."""
    return [(x, y) for x in range(p) for y in range(p)]


def _gf_mul(u, v, p, red):
    x1, y1 = u
    x2, y2 = v
    c0 = x1 * x2
    c1 = x1 * y2 + y1 * x2
    c2 = y1 * y2
    # reduce t^2 = -red[1] t - red[0]
    c1 -= c2 * red[1]
    c0 -= c2 * red[0]
    return (c0 % p, c1 % p)


def _gf_sub(u, v, p):
    return ((u[0] - v[0]) % p, (u[1] - v[1]) % p)


def sl2_order_quadratic(p, red):
    """|SL2(F_{p^2})| with the field presented by t^2 + red[1] t + red[0]."""
    els = _gf_elements(p, red)
    one = (1, 0)
    count = 0
    for a in els:
        for b in els:
            for c in els:
                for d in els:
                    det = _gf_sub(_gf_mul(a, d, p, red), _gf_mul(b, c, p, red), p)
                    if det == one:
                        count += 1
    return count
