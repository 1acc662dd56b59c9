"""S-unit groups, CM detection, and the choice of the S-unit alpha.

The finite-prime data of a set S comes with class-order witnesses: for
each prime q_i in S a minimal a_i and generator beta_i with
q_i^{a_i} = (beta_i).  Together with the fundamental units and a
torsion generator these give a finite-index subgroup of O_S^* in which
all searches below run (for quadratic fields the subgroup is the whole
unit group up to torsion choice; datasheet fields may declare less,
which only shrinks the search space, never breaks exactness).

Alpha is selected by exhaustive shell search over exponent vectors,
rejecting vectors that fall into the rational span of the unit groups
of intermediate fields (the W test) and vectors that miss a required
negative valuation (the V test, automatic here because every finite
exponent is >= 1).  Every property of the returned certificate is
verified exactly before it is emitted.

O_S itself is exhausted by the level filtration Lambda_k = B^-k O_K,
B = prod beta_i: indices [O_S : Z[alpha^n]] are computed per level and
accepted once three consecutive levels and a degree enlargement agree.
"""

import itertools
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import (CardinalityTooSmall, HypothesisFails, NotASubfield,
                     NotStabilized, SearchExhausted)
from .field import (FieldElement, NumberField, create_field, format_rational,
                    fundamental_unit)
from .ideals import class_order, factor_rational_prime, valuation
from .linalg import RatLattice
from .polys import (count_roots_in, degree, peval, root_bound, sturm_chain,
                    trim)


class PrimeSet:
    """All infinite places plus a canonically sorted set of finite primes."""

    __slots__ = ("field", "finite", "infinite_count")

    def __init__(self, field, finite, min_card=2):
        self.field = field
        by_key = {p.hnf: p for p in finite}
        self.finite = tuple(sorted(by_key.values(), key=lambda p: p.sort_key()))
        self.infinite_count = field.signature[0] + field.signature[1]
        if self.card < min_card:
            raise CardinalityTooSmall(
                f"card(S) = {self.card}, need at least {min_card}")

    @property
    def card(self):
        return self.infinite_count + len(self.finite)

    def contains(self, prime):
        return any(p.hnf == prime.hnf for p in self.finite)

    def serialize(self):
        return {
            "infinite_places": self.infinite_count,
            "finite": [p.serialize() for p in self.finite],
            "card": self.card,
        }

    def __repr__(self):
        return f"PrimeSet(inf={self.infinite_count}, finite={list(self.finite)})"


# ---------------------------------------------------------------------------
# Torsion.

def _torsion_units(field):
    """(order, generator) for the roots of unity.

    Complete for degree <= 2.  Datasheet fields get (-1, order 2): a
    valid generator of a finite-index subgroup of the torsion, which is
    all the downstream constructions need.
    """
    minus_one = field.from_rational(-1)
    if field.degree == 1 or field.tier == "datasheet" or field.signature[0] > 0:
        return 2, minus_one
    # imaginary quadratic: enumerate norm-1 integral elements exactly
    m, _ = field._quad
    am = -m
    if field.field_discriminant % 2:
        ymax = _isqrt(4 // am)
    else:
        ymax = _isqrt(1 // am) if am <= 1 else 0
    units = set()
    candidates = []
    for x in range(0, 2 + ymax):
        for y in range(0, ymax + 1):
            for xx, yy in ((x, y), (x, -y)) if x and y else ((x, y),):
                el = field.from_ib((xx, yy))
                if el.is_zero() or abs(el.norm()) != 1:
                    continue
                for cand in (el, -el):
                    if cand.coords not in units:
                        units.add(cand.coords)
                        candidates.append(cand)
    w = len(units)
    for cand in candidates:
        power = cand
        order = 1
        while power != field.one:
            power = power * cand
            order += 1
        if order == w:
            return w, cand
    raise AssertionError("no generator among the torsion units")


def _isqrt(n):
    from math import isqrt
    return isqrt(max(n, 0))


# ---------------------------------------------------------------------------
# S-unit bases.

class SUnitBasis:
    __slots__ = ("field", "S", "torsion_order", "torsion_gen", "fund_units",
                 "s_gens", "class_witnesses", "valuation_matrix")

    def __init__(self, field, S, torsion_order, torsion_gen, fund_units,
                 s_gens, class_witnesses, valuation_matrix):
        self.field = field
        self.S = S
        self.torsion_order = torsion_order
        self.torsion_gen = torsion_gen
        self.fund_units = tuple(fund_units)
        self.s_gens = tuple(s_gens)
        self.class_witnesses = tuple(class_witnesses)
        self.valuation_matrix = tuple(tuple(r) for r in valuation_matrix)

    @property
    def rank(self):
        return len(self.fund_units) + len(self.s_gens)

    def generators(self):
        return list(self.fund_units) + list(self.s_gens)

    def serialize(self):
        return {
            "torsion_order": self.torsion_order,
            "torsion_generator": self.torsion_gen.serialize(),
            "fundamental_units": [u.serialize() for u in self.fund_units],
            "s_generators": [{"element": b.serialize(),
                              "class_order": w.order,
                              "minimal_verified": w.minimal_verified}
                             for b, w in zip(self.s_gens, self.class_witnesses)],
            "rank": self.rank,
            "valuation_matrix": [list(r) for r in self.valuation_matrix],
        }


def s_unit_basis(field, S):
    """Torsion, fundamental units, and class-order generators for S.

    The valuation matrix (rows: generators, columns: finite primes of
    S) is rebuilt from scratch with the membership-ladder valuation and
    checked against what the class orders promise.
    """
    w, zeta = _torsion_units(field)
    if field.degree == 1:
        fund = []
    elif field.tier == "datasheet":
        fund = list(field.datasheet["fundamental_units"])
    elif field.is_quadratic_real():
        fund = [fundamental_unit(field)]
    else:
        fund = []
    witnesses = [class_order(P) for P in S.finite]
    s_gens = [wit.generator for wit in witnesses]

    vmat = []
    for u in fund:
        row = [valuation(u, P) for P in S.finite]
        if any(row):
            raise AssertionError("fundamental unit has a finite S-valuation")
        vmat.append(row)
    for i, (b, wit) in enumerate(zip(s_gens, witnesses)):
        row = [valuation(b, P) for P in S.finite]
        # q_i^{a_i} = (beta_i) forces v_{q_i}(beta_i) = a_i and v = 0 at
        # the other members of S (primes of S over the same p are distinct)
        if row[i] != wit.order:
            raise AssertionError("generator valuation inconsistent with class order")
        for j, v in enumerate(row):
            if j != i and v != 0:
                raise AssertionError("generator has a stray valuation inside S")
        vmat.append(row)
    basis = SUnitBasis(field, S, w, zeta, fund, s_gens, witnesses, vmat)
    if field.tier == "automatic":
        assert basis.rank == S.card - 1
    return basis


# ---------------------------------------------------------------------------
# Subfields.

class SubfieldDescriptor:
    """A proper subfield F of K given by the image of its generator."""

    __slots__ = ("field", "subfield", "embedding")

    def __init__(self, field, subfield, embedding):
        self.field = field
        self.subfield = subfield
        self.embedding = embedding
        k = subfield.degree
        n = field.degree
        if k >= n or n % k:
            raise NotASubfield(f"degree {k} does not properly divide {n}")
        mp = embedding.minimal_poly()
        if tuple(mp) != tuple(Fraction(c) for c in subfield.poly):
            raise NotASubfield("embedding does not satisfy the subfield polynomial")

    def map_element(self, x):
        """Image in K of an element of F (power coordinates evaluated
        at the embedding)."""
        acc = self.field.zero
        for k_, c in enumerate(x.coords):
            if c:
                acc = acc + self.embedding ** k_ * c
        return acc

    def is_rationals(self):
        return self.subfield.degree == 1

    def power_images(self):
        return [self.embedding ** i for i in range(self.subfield.degree)]

    def serialize(self):
        return {"poly": list(self.subfield.poly),
                "embedding": self.embedding.serialize()}

    def __repr__(self):
        return f"SubfieldDescriptor({list(self.subfield.poly)})"


def rational_subfield(field):
    return SubfieldDescriptor(field, create_field([-1, 1]), field.one)


def default_subfields(field):
    """The proper subfields consulted by the searches: nothing for Q,
    Q for quadratics, Q plus every declared subfield for datasheet fields."""
    if field.degree == 1:
        return []
    out = [rational_subfield(field)]
    if field.tier == "datasheet":
        for entry in field.datasheet.get("subfields", []):
            from .field import parse_rational
            emb = field.element([parse_rational(x) for x in entry["embedding"]])
            sub = create_field([int(c) for c in entry["poly"]])
            out.append(SubfieldDescriptor(field, sub, emb))
    return out


def contract_prime(prime, F_desc):
    """The prime of F below a prime of K."""
    matches = []
    for q in factor_rational_prime(F_desc.subfield, prime.p):
        pi = F_desc.map_element(q.two_element[1])
        if pi.is_zero() or prime.contains(pi):
            matches.append(q)
    assert len(matches) == 1, "a K-prime lies over exactly one F-prime"
    return matches[0]


def primes_above(field, q, F_desc):
    """All primes of K over a prime q of the subfield."""
    pi = F_desc.map_element(q.two_element[1])
    out = []
    for P in factor_rational_prime(field, q.p):
        if pi.is_zero() or P.contains(pi):
            out.append(P)
    return out


def contract_prime_set(S, F_desc):
    finite = {}
    for P in S.finite:
        q = contract_prime(P, F_desc)
        finite[q.hnf] = q
    return PrimeSet(F_desc.subfield, list(finite.values()), min_card=1)


# ---------------------------------------------------------------------------
# CM structure.

class CMStructure:
    """K = F(sqrt(-d)) with F totally real and d totally positive in F."""

    __slots__ = ("F", "d_in_F", "d_in_K", "sqrt_minus_d")

    def __init__(self, F, d_in_F, d_in_K, sqrt_minus_d):
        self.F = F
        self.d_in_F = d_in_F
        self.d_in_K = d_in_K
        self.sqrt_minus_d = sqrt_minus_d

    def serialize(self):
        return {
            "subfield": self.F.serialize(),
            "d": self.d_in_F.serialize(),
            "sqrt_minus_d": self.sqrt_minus_d.serialize(),
        }


def _totally_positive(x):
    """Exact check that every real conjugate of x is positive."""
    mp = [Fraction(c) for c in x.minimal_poly()]
    if peval(mp, 0) == 0:
        return False
    chain = sturm_chain(mp)
    b = root_bound(mp)
    return count_roots_in(chain, Fraction(0), b) == degree(list(mp))


def is_cm(field):
    """The CM structure of K, or None.

    Degree 2: signature (0, 1) means K = Q(sqrt(-d)) outright.  Higher
    degree: K must be totally imaginary with a declared totally real
    subfield of index 2; theta is split into its F-trace part and a
    square root of a totally positive element of F.
    """
    n = field.degree
    if n == 1 or field.signature[0] != 0:
        return None
    if n == 2:
        F = rational_subfield(field)
        m, _ = field._quad
        delta = field.sqrt_disc_core()
        d = -m
        return CMStructure(F, F.subfield.from_rational(d),
                           field.from_rational(d), delta)
    for F in default_subfields(field):
        if F.is_rationals() or 2 * F.subfield.degree != n:
            continue
        if F.subfield.signature != (F.subfield.degree, 0):
            continue
        cm = _split_off_sqrt(field, F)
        if cm is not None:
            return cm
    return None


def _split_off_sqrt(field, F_desc):
    n = field.degree
    k = n // 2
    g_powers = [list(p.coords) for p in F_desc.power_images()]
    theta_g = [list((field.theta * field.element(row)).coords) for row in g_powers]
    rows = g_powers + theta_g
    target = list((field.theta * field.theta).coords)
    sol = linalg.span_coeffs(rows, target)
    if sol is None:
        return None
    w_half = field.zero
    for c, row in zip(sol[k:], g_powers):
        if c:
            w_half = w_half + field.element(row) * (c / 2)
    delta = field.theta - w_half
    dd = delta * delta
    in_F = linalg.span_coeffs(g_powers, list(dd.coords))
    if in_F is None:
        return None
    # clear denominators and content so that delta is a primitive integer
    den = delta.denominator_to_basis()
    delta = delta * den
    content = 0
    for c in delta.ib_coords():
        content = gcd(content, int(c))
    if content > 1:
        delta = delta * Fraction(1, content)
    d_K = -(delta * delta)
    coeffs = linalg.span_coeffs(g_powers, list(d_K.coords))
    assert coeffs is not None
    d_F = F_desc.subfield.element(coeffs)
    if not _totally_positive(d_F):
        return None
    return CMStructure(F_desc, d_F, d_K, delta)


# ---------------------------------------------------------------------------
# Rank of the intersection with a subfield's S-units.

def rank_of_intersection(field, S, F_desc):
    """rank of (units of the S(F)-integers of F that remain S-units),
    which is rank(O_F^*) plus the number of finite primes of S(F) all of
    whose K-primes lie in S."""
    F = F_desc.subfield
    r1, r2 = F.signature
    base = r1 + r2 - 1
    SF = contract_prime_set(S, F_desc)
    qualifying = 0
    for q in SF.finite:
        above = primes_above(field, q, F_desc)
        if all(S.contains(P) for P in above):
            qualifying += 1
    return base + qualifying


# ---------------------------------------------------------------------------
# Exponent vectors of S-units over a basis.

def _is_root_of_unity(field, t, max_order=24):
    power = t
    for _ in range(max_order):
        if power == field.one:
            return True
        power = power * t
    return False


def exponent_vector(sbasis, w, dlog_bound=64):
    """Rational exponents (over fund_units + s_gens) of an S-unit w,
    modulo torsion.  Exact: the residual after stripping the beta part
    is resolved by bounded search with exact equality."""
    field = sbasis.field
    beta_exps = []
    for P, wit in zip(sbasis.S.finite, sbasis.class_witnesses):
        v = valuation(w, P)
        beta_exps.append(Fraction(v, wit.order))
    M = 1
    for e in beta_exps:
        M = M * e.denominator // gcd(M, e.denominator)
    r = w ** M
    for b, e in zip(sbasis.s_gens, beta_exps):
        r = r * b ** (-int(e * M))
    assert r.is_integral() and abs(r.norm()) == 1, "residual must be a unit"
    nf = len(sbasis.fund_units)
    if nf == 0:
        if not _is_root_of_unity(field, r):
            raise SearchExhausted("unit residual is not torsion")
        return tuple(beta_exps)
    if nf == 1:
        eps = sbasis.fund_units[0]
        for k in range(dlog_bound + 1):
            for kk in ((k, -k) if k else (0,)):
                t = r * eps ** (-kk)
                if _is_root_of_unity(field, t):
                    return (Fraction(kk, M),) + tuple(beta_exps)
        raise SearchExhausted("unit discrete log out of range")
    for combo in itertools.product(range(-8, 9), repeat=nf):
        t = r
        for e, eps in zip(combo, sbasis.fund_units):
            t = t * eps ** (-e)
        if _is_root_of_unity(field, t):
            return tuple(Fraction(e, M) for e in combo) + tuple(beta_exps)
    raise SearchExhausted("unit discrete log out of range")


def _fund_units_of(F):
    if F.degree == 1:
        return []
    if F.tier == "datasheet":
        return list(F.datasheet["fundamental_units"])
    if F.is_quadratic_real():
        return [fundamental_unit(F)]
    return []


def subfield_unit_vectors(field, S, sbasis, F_desc):
    """Exponent vectors spanning (over Q) the S-units of K coming from
    units of the S(F)-integers of F."""
    vectors = []
    labels = []
    for u in _fund_units_of(F_desc.subfield):
        w = F_desc.map_element(u)
        vectors.append(exponent_vector(sbasis, w))
        labels.append({"kind": "subfield_unit", "element": w.serialize()})
    SF = contract_prime_set(S, F_desc)
    for q in SF.finite:
        above = primes_above(field, q, F_desc)
        if all(S.contains(P) for P in above):
            wit = class_order(q)
            w = F_desc.map_element(wit.generator)
            vectors.append(exponent_vector(sbasis, w))
            labels.append({"kind": "subfield_class_generator",
                           "p": q.p, "element": w.serialize()})
    return vectors, labels


# ---------------------------------------------------------------------------
# The alpha search.

class AlphaCertificate:
    __slots__ = ("field", "S", "sbasis", "alpha", "torsion_exp", "fund_exps",
                 "beta_exps", "neg_valuations", "minpoly", "avoidance",
                 "index_table", "unit_part")

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def serialize(self):
        return {
            "alpha": self.alpha.serialize(),
            "exponents": {
                "torsion": self.torsion_exp,
                "fundamental_units": list(self.fund_exps),
                "s_generators": list(self.beta_exps),
            },
            "negative_valuations": [
                {"p": p.p, "hnf": [list(r) for r in p.hnf], "v": v}
                for p, v in self.neg_valuations],
            "minimal_poly": [format_rational(c) for c in self.minpoly],
            "degree": len(self.minpoly) - 1,
            "avoidance": self.avoidance,
            "index_table": [{"n": n, "index": str(i), "level": l}
                            for n, i, l in self.index_table],
            "power_identity": self.unit_part,
        }


def _fund_exponent_sequence(shell):
    out = [0]
    for k in range(1, shell + 1):
        out.extend((k, -k))
    return out


def choose_alpha(field, S, subfields=None, *, sbasis=None, max_shell=32,
                 index_exponents=(1, 2, 3), level_bound=12):
    """Search for alpha in O_S^* with negative valuation at every finite
    prime of S, avoiding every intermediate field's S-unit span, and
    generating K; returns a fully verified certificate.

    Deterministic: candidates are enumerated by max-exponent shells,
    with inverse class-generator exponents >= 1 throughout (which settles
    the V-type conditions), fundamental-unit exponents in the order
    0, 1, -1, 2, -2, ..., and the torsion exponent last.
    """
    if sbasis is None:
        sbasis = s_unit_basis(field, S)
    if subfields is None:
        subfields = default_subfields(field)
    rank = sbasis.rank
    hyp = []
    for F in subfields:
        ri = rank_of_intersection(field, S, F)
        hyp.append((F, ri))
        if ri >= rank:
            raise HypothesisFails(
                f"rank of the intersection with {F!r} is {ri}, not below {rank}")
    spans = []
    for F, ri in hyp:
        vectors, labels = subfield_unit_vectors(field, S, sbasis, F)
        assert len(vectors) == ri, "span generators must realize the rank"
        spans.append((F, vectors, labels))

    nf, nb = len(sbasis.fund_units), len(sbasis.s_gens)
    w = sbasis.torsion_order
    tried = 0
    rejected_span = 0
    rejected_degree = 0
    for shell in range(1, max_shell + 1):
        for cb in itertools.product(range(1, shell + 1), repeat=nb):
            for cf in itertools.product(_fund_exponent_sequence(shell), repeat=nf):
                top = max([abs(c) for c in cf] + list(cb) + [0])
                if top != shell:
                    continue
                tried += 1
                vec = [Fraction(c) for c in cf] + [Fraction(-c) for c in cb]
                hit = False
                for F, vectors, labels in spans:
                    if vectors:
                        base_rank = linalg.mat_rank(vectors)
                        if linalg.mat_rank(vectors + [vec]) == base_rank:
                            hit = True
                            break
                    elif not any(vec):
                        hit = True
                        break
                if hit:
                    rejected_span += 1
                    continue
                for c0 in range(w):
                    alpha = sbasis.torsion_gen ** c0
                    for e, u in zip(cf, sbasis.fund_units):
                        alpha = alpha * u ** e
                    for e, b in zip(cb, sbasis.s_gens):
                        alpha = alpha * b ** (-e)
                    mp = alpha.minimal_poly()
                    if len(mp) - 1 != field.degree:
                        rejected_degree += 1
                        continue
                    return _certify_alpha(field, S, sbasis, alpha, c0, cf, cb,
                                          mp, spans, vec, tried, rejected_span,
                                          rejected_degree, index_exponents,
                                          level_bound)
    raise SearchExhausted(f"no alpha within exponent shells up to {max_shell}")


def _certify_alpha(field, S, sbasis, alpha, c0, cf, cb, mp, spans, vec,
                   tried, rejected_span, rejected_degree, index_exponents,
                   level_bound):
    neg = []
    for P in S.finite:
        v = valuation(alpha, P)
        if v >= 0:
            raise AssertionError("alpha must have negative valuation inside S")
        neg.append((P, v))
    # exact power identity: alpha * prod beta^{c_i} is the absorbed unit
    u = sbasis.torsion_gen ** c0
    for e, fu in zip(cf, sbasis.fund_units):
        u = u * fu ** e
    check = alpha
    for e, b in zip(cb, sbasis.s_gens):
        check = check * b ** e
    assert check == u, "power identity must hold exactly"
    avoidance = {
        "candidates_tried": tried,
        "rejected_by_subfield_span": rejected_span,
        "rejected_by_degree": rejected_degree,
        "exponent_vector": [format_rational(x) for x in vec],
        "subfields": [],
        "single_prime_removals": [
            {"p": P.p, "hnf": [list(r) for r in P.hnf], "valuation": v}
            for P, v in neg],
    }
    for F, vectors, labels in spans:
        avoidance["subfields"].append({
            "poly": list(F.subfield.poly),
            "span_vectors": [[format_rational(x) for x in row] for row in vectors],
            "span_rank": linalg.mat_rank(vectors) if vectors else 0,
            "rank_with_alpha": linalg.mat_rank(vectors + [vec]) if vectors
            else (1 if any(vec) else 0),
            "generators": labels,
        })
    index_table = []
    for ne in index_exponents:
        res = zalpha_index(field, S, alpha, ne, sbasis=sbasis,
                           level_bound=level_bound)
        index_table.append((ne, res.index, res.level))
    unit_part = {
        "m": 1,
        "beta_exponents": list(cb),
        "unit": u.serialize(),
        "identity": "alpha^m * prod(beta_i^{b_i}) = unit",
    }
    return AlphaCertificate(field=field, S=S, sbasis=sbasis, alpha=alpha,
                            torsion_exp=c0, fund_exps=list(cf),
                            beta_exps=[-c for c in cb],
                            neg_valuations=neg, minpoly=mp,
                            avoidance=avoidance, index_table=index_table,
                            unit_part=unit_part)


# ---------------------------------------------------------------------------
# The level filtration and ring indices.

class LevelFiltration:
    """Lambda_k = B^-k O_K (integral-basis coordinates), union = O_S."""

    def __init__(self, field, sbasis):
        self.field = field
        b = field.one
        for g in sbasis.s_gens:
            b = b * g
        self.B = b
        self._binv_pow = [field.one]
        self._levels = []

    def level(self, k):
        while len(self._levels) <= k:
            j = len(self._levels)
            while len(self._binv_pow) <= j:
                self._binv_pow.append(self._binv_pow[-1] * self.B.inverse())
            scale = self._binv_pow[j]
            rows = [(scale * self.field.basis_element(i)).ib_coords()
                    for i in range(self.field.degree)]
            self._levels.append(RatLattice.from_rows(rows, self.field.degree))
        return self._levels[k]


class ZalphaResult:
    __slots__ = ("index", "level", "per_level")

    def __init__(self, index, level, per_level):
        self.index = index
        self.level = level
        self.per_level = per_level

    def serialize(self):
        return {"index": str(self.index), "stabilization_level": self.level,
                "per_level": [str(v) if v is not None else None
                              for v in self.per_level]}


def stabilized_index(filt, gens_fn, ncols, level_bound=12):
    """Index [union Lambda_k : span gens] by per-level agreement.

    gens_fn(J) yields the stage-J generators; level k is tested with
    J = k + 2.  A value is accepted when levels k, k+1, k+2 agree and
    enlarging the degree at level k does not change it.
    """
    per_level = []

    def idx(k, J):
        rows = [list(e.ib_coords()) for e in gens_fn(J)]
        M = RatLattice.from_rows(rows, ncols)
        lk = filt.level(k)
        out = M.intersect(lk).index_in(lk)
        return out if isinstance(out, int) else None

    for k in range(level_bound + 1):
        per_level.append(idx(k, k + 2))
        if k >= 2:
            k0 = k - 2
            v = per_level[k0]
            if v is not None and per_level[k0 + 1] == v and per_level[k0 + 2] == v:
                if idx(k0, k0 + 3) == v:
                    return v, k0, per_level
    raise NotStabilized(
        f"index did not stabilize within {level_bound} filtration levels")


def zalpha_index(field, S, alpha, n=1, *, sbasis=None, extra_gens=(),
                 level_bound=12):
    """[O_S : Z[alpha^n]] (or of Z[alpha^n] extended by extra generators)
    with its stabilization level."""
    if sbasis is None:
        sbasis = s_unit_basis(field, S)
    a = alpha ** n
    filt = LevelFiltration(field, sbasis)
    pows = [field.one]

    def gens(J):
        while len(pows) <= J:
            pows.append(pows[-1] * a)
        out = list(pows[:J + 1])
        for g in extra_gens:
            out.extend(g * p for p in pows[:J + 1])
        return out

    v, lvl, seq = stabilized_index(filt, gens, field.degree, level_bound)
    return ZalphaResult(v, lvl, seq)
