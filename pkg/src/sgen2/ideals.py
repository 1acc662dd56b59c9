"""Nonzero integral ideals of the maximal order.

An ideal is stored as the canonical HNF of its Z-lattice in
integral-basis coordinates, so equality of ideals is equality of
matrices and sorting by matrix gives a canonical prime ordering.

Prime factorization is complete for degree <= 2 (the maximal order is
Z[omega], so the splitting of p mirrors the factorization of omega's
minimal polynomial mod p for every p).  In the datasheet tier the same
statement needs p coprime to the index of Z[t] in the maximal order;
the Dedekind criterion detects the bad primes and IndexDivisor reports
them as out of scope.
"""

from fractions import Fraction
from math import isqrt

from . import linalg, polys
from .errors import (ConfigInvalid, DatasheetInvalid, DatasheetRequired,
                     IndexDivisor, NotContained, OrderBoundExceeded,
                     ZeroElement)
from .field import FieldElement, fundamental_unit, parse_rational


class IntegralIdeal:
    __slots__ = ("field", "hnf", "_norm", "_powers")

    def __init__(self, field, rows):
        self.field = field
        h = linalg.hnf(rows)
        if len(h) != field.degree:
            raise ValueError("not a full-rank (nonzero) ideal lattice")
        self.hnf = tuple(h)
        self._norm = None
        self._powers = None

    @classmethod
    def from_elements(cls, field, elements):
        rows = []
        for e in elements:
            if isinstance(e, int):
                e = field.from_rational(e)
            for i in range(field.degree):
                prod = e * field.basis_element(i)
                c = prod.ib_coords()
                if any(x.denominator != 1 for x in c):
                    raise ValueError(f"generator {e!r} is not integral")
                rows.append([int(x) for x in c])
        return cls(field, rows)

    @classmethod
    def principal(cls, field, element):
        return cls.from_elements(field, [element])

    @property
    def norm(self):
        if self._norm is None:
            n = 1
            for i, row in enumerate(self.hnf):
                n *= row[i]
            self._norm = n
        return self._norm

    def contains(self, element):
        c = element.ib_coords()
        if any(x.denominator != 1 for x in c):
            return False
        return linalg.in_lattice(list(self.hnf), [int(x) for x in c])

    def __mul__(self, other):
        if not isinstance(other, IntegralIdeal):
            return NotImplemented
        f = self.field
        gens_a = [f.from_ib(r) for r in self.hnf]
        gens_b = [f.from_ib(r) for r in other.hnf]
        rows = []
        for a in gens_a:
            for b in gens_b:
                c = (a * b).ib_coords()
                rows.append([int(x) for x in c])
        return IntegralIdeal(f, rows)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        if e == 0:
            return IntegralIdeal(self.field,
                                 [[int(i == j) for j in range(self.field.degree)]
                                  for i in range(self.field.degree)])
        if self._powers is None:
            self._powers = [self ** 0, self]
        while len(self._powers) <= e:
            self._powers.append(self._powers[-1] * self)
        return self._powers[e]

    def __eq__(self, other):
        return (isinstance(other, IntegralIdeal) and self.field is other.field
                and self.hnf == other.hnf)

    def __hash__(self):
        return hash((id(self.field), self.hnf))

    def sort_key(self):
        return self.hnf

    def serialize(self):
        return {"hnf": [list(r) for r in self.hnf], "norm": self.norm}

    def __repr__(self):
        return f"IntegralIdeal({[list(r) for r in self.hnf]})"


class PrimeIdeal(IntegralIdeal):
    __slots__ = ("p", "e", "f", "two_element")

    def __init__(self, field, rows, p, e, f, two_element):
        super().__init__(field, rows)
        self.p = p
        self.e = e
        self.f = f
        self.two_element = two_element

    @property
    def residue_size(self):
        return self.p ** self.f

    def serialize(self):
        out = super().serialize()
        out.update({
            "p": self.p, "e": self.e, "f": self.f,
            "two_element": [self.two_element[0],
                            self.two_element[1].serialize()],
        })
        return out

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, e={self.e}, f={self.f}, pi={self.two_element[1]!r})"


class ClassOrderWitness:
    __slots__ = ("ideal", "order", "generator", "minimal_verified")

    def __init__(self, ideal, order, generator, minimal_verified):
        self.ideal = ideal
        self.order = order
        self.generator = generator
        self.minimal_verified = minimal_verified

    def serialize(self):
        return {"order": self.order,
                "generator": self.generator.serialize(),
                "minimal_verified": self.minimal_verified}


# ---------------------------------------------------------------------------
# Factoring rational primes.

def _symmetric_lift(r, p):
    r %= p
    return r if r <= p // 2 else r - p


def _omega_minpoly(field):
    """x^2 - (Tr w) x + N(w) for the second integral basis element."""
    w = field.basis_element(1)
    t, s = w.trace(), w.norm()
    assert t.denominator == 1 and s.denominator == 1
    return int(s), -int(t)  # constant, linear coefficient


def _quadratic_prime(field, p, root):
    """The prime (p, w - root) for a root of w's minimal polynomial mod p."""
    w = field.basis_element(1)
    pi = w - field.from_rational(_symmetric_lift(root, p))
    return pi


def _theta_presentation(field, p, ideal_rows_hnf, fallback):
    """Prefer pi = t - r with r a defining-polynomial root mod p, when
    (p, t - r) equals the prime exactly; otherwise keep the omega-based
    generator."""
    for r in polys.roots_mod_p(list(field.poly), p):
        cand = field.theta - field.from_rational(_symmetric_lift(r, p))
        rows = _ideal_rows(field, [field.from_rational(p), cand])
        if tuple(linalg.hnf(rows)) == tuple(ideal_rows_hnf):
            return cand
    return fallback


def factor_rational_prime(field, p):
    """All primes above p, canonically ordered, with e and f attached."""
    if not isinstance(p, int) or not polys.is_prime(p):
        raise ConfigInvalid(f"not a rational prime: {p}")
    n = field.degree
    if n == 1:
        rows = [[p]]
        return (PrimeIdeal(field, rows, p, 1, 1, (p, field.zero)),)

    if field.tier == "automatic":
        s, b = _omega_minpoly(field)
        fac = polys.factor_mod_p([s, b, 1], p)
        degs = sorted((polys.degree(g), mult) for g, mult in fac)
        if degs == [(2, 1)]:
            rows = [[p if i == j else 0 for j in range(2)] for i in range(2)]
            prime = PrimeIdeal(field, rows, p, 1, 2, (p, field.zero))
            primes = [prime]
        else:
            primes = []
            for g, mult in fac:
                root = (-g[0]) % p
                pi = _quadratic_prime(field, p, root)
                rows = _ideal_rows(field, [field.from_rational(p), pi])
                h = linalg.hnf(rows)
                pi = _theta_presentation(field, p, h, pi)
                primes.append(PrimeIdeal(field, rows, p, mult, 1, (p, pi)))
    else:
        fac = polys.factor_mod_p(list(field.poly), p)
        if _dedekind_index_divisor(field.poly, fac, p):
            raise IndexDivisor(
                f"p = {p} divides the index of Z[t]; factorization out of scope")
        primes = []
        for g, mult in fac:
            # pi = (lift of the factor) evaluated at theta
            pi = field.zero
            for k, c in enumerate(_symmetric_lift(ci, p) for ci in g):
                if c:
                    pi = pi + field.theta ** k * c
            rows = _ideal_rows(field, [field.from_rational(p), pi])
            primes.append(PrimeIdeal(field, rows, p, mult, polys.degree(g), (p, pi)))

    primes.sort(key=lambda q: q.sort_key())
    check = primes[0] ** 0
    total = 0
    prod = check
    for q in primes:
        total += q.e * q.f
        prod = prod * (q ** q.e)
    assert total == n, "sum of e*f must equal the degree"
    assert prod == IntegralIdeal.from_elements(field, [field.from_rational(p)]), \
        "product of prime powers must be (p)"
    return tuple(primes)


def _ideal_rows(field, elements):
    rows = []
    for e in elements:
        for i in range(field.degree):
            c = (e * field.basis_element(i)).ib_coords()
            rows.append([int(x) for x in c])
    return rows


def _dedekind_index_divisor(poly, fac, p):
    """True iff p divides [O_K : Z[t]] (Dedekind's criterion)."""
    gbar = [1]
    hbar = [1]
    for g, mult in fac:
        gbar = polys.pp_mul(gbar, g, p)
        for _ in range(mult - 1):
            hbar = polys.pp_mul(hbar, g, p)
    gl = [_symmetric_lift(c, p) for c in gbar]
    hl = [_symmetric_lift(c, p) for c in hbar]
    prod = polys.pmul(gl, hl)
    diff = polys.psub(prod, list(poly))
    T = [c // p for c in diff]
    assert all(c % p == 0 for c in diff)
    d = polys.pp_gcd(polys.pp_gcd(polys.pp_trim(T, p), gbar, p), hbar, p)
    return polys.degree(d) > 0


# ---------------------------------------------------------------------------
# Valuations.

def valuation(x, prime):
    """v_P(x) for x in K*, via the prime-power membership ladder."""
    if not isinstance(x, FieldElement):
        raise TypeError("element expected")
    if x.is_zero():
        raise ZeroElement("valuation of zero")
    den = x.denominator_to_basis()
    y = x * den
    vp_den = 0
    d = den
    while d % prime.p == 0:
        d //= prime.p
        vp_den += 1
    k = 0
    while (prime ** (k + 1)).contains(y):
        k += 1
    return k - prime.e * vp_den


# ---------------------------------------------------------------------------
# Class-group orders by exhaustive principality testing.

def _principal_generator_quadratic(ideal):
    """A generator of the ideal if principal, else None.  Exhaustive: the
    coordinate box provably covers some generator whenever one exists.

    Imaginary case: a generator has norm exactly N, so both embeddings
    are constrained and the box is tight.  Real case: every generator
    has an associate whose two embeddings lie below sqrt(N * eps) in
    absolute value, eps the fundamental unit; the box uses a rational
    upper bound for that with a safety factor of 4 on each side.
    """
    field = ideal.field
    N = ideal.norm
    m, _ = field._quad
    if m < 0:
        am = -m
        if field.field_discriminant % 2:  # omega = (1 + sqrt m)/2
            ymax = isqrt(4 * N // am)
        else:
            ymax = isqrt(N // am)
        xmax = isqrt(N) + ymax + 1
    else:
        eps = fundamental_unit(field)
        # |theta| <= (|b| + sqrt(disc of the defining poly)) / 2
        b, c = field.poly[1], field.poly[0]
        theta_up = (abs(b) + polys.sqrt_upper(b * b - 4 * c)) / 2
        bound = abs(eps.coords[0]) + abs(eps.coords[1]) * theta_up
        B = 4 * (isqrt(int(N * bound) + 1) + 1)
        xmax = B
        ymax = B // isqrt(m) + 1
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            for xx, yy in ((x, y), (x, -y)) if x and y else ((x, y),):
                el = field.from_ib((xx, yy))
                if abs(el.norm()) != N:
                    continue
                if ideal.contains(el):
                    return el
    return None


def _principal_generator(ideal):
    field = ideal.field
    if field.degree == 1:
        return field.from_rational(ideal.hnf[0][0])
    return _principal_generator_quadratic(ideal)


def class_order(ideal, bound=10000):
    """Smallest a >= 1 with ideal^a principal, plus a verified generator.

    Automatic tier: exhaustive, so minimality is proved.  Datasheet
    tier: the declared order is verified to be an order (the power is
    principal with the declared generator); its minimality is taken on
    faith from the datasheet.
    """
    field = ideal.field
    if field.tier == "automatic":
        power = ideal ** 0
        for a in range(1, bound + 1):
            power = power * ideal
            gen = _principal_generator(power)
            if gen is not None:
                assert IntegralIdeal.principal(field, gen) == power
                return ClassOrderWitness(ideal, a, gen, True)
        raise OrderBoundExceeded(f"no principal power up to {bound}")

    ds = field.datasheet or {}
    for entry in ds.get("class_orders", []):
        declared = IntegralIdeal(field, entry["ideal"])
        if declared == ideal:
            a = entry["order"]
            gen = field.element([parse_rational(x) for x in entry["generator"]])
            if not (ideal ** a == IntegralIdeal.principal(field, gen)):
                raise DatasheetInvalid(
                    f"declared class order {a} is not witnessed by the generator")
            return ClassOrderWitness(ideal, a, gen, False)
    raise DatasheetRequired(
        f"no class_orders entry for the ideal with HNF {[list(r) for r in ideal.hnf]}")


# ---------------------------------------------------------------------------
# Index of one lattice in another (public wrapper with taxonomy errors).

def lattice_index(l1_rows, l2_rows):
    """[L1 : L2] for integer row lattices in a common coordinate system.

    Returns a positive integer, or the string "infinite" when L2 has
    smaller rank; raises NotContained when L2 is not inside L1.
    """
    h1 = linalg.hnf(l1_rows)
    h2 = linalg.hnf(l2_rows)
    out = linalg.lattice_index_hnf(h1, h2)
    if out is None:
        raise NotContained("second lattice is not contained in the first")
    return out
