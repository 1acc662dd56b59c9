"""Case classification and construction of the generating triple.

Case 1: some exponent search on K itself succeeds (every intermediate
field's S-unit rank is strictly below rank(O_S^*)); the triple is

    gamma = diag(alpha^h, alpha^-h),  psi1 = E21(h),  psi2 = E12(h).

Case 2: the rank bound is attained by a subfield F, which forces K to
be CM over F with no finite prime of S(F) splitting in K; alpha is then
chosen in F for the contracted prime set and psi2 picks up sqrt(-d):

    psi2 = [[1, h*sqrt(-d)], [0, 1]].
"""

from .errors import HypothesisFails, InconsistentCM
from .sunits import (choose_alpha, contract_prime_set, default_subfields,
                     is_cm, primes_above, rank_of_intersection, s_unit_basis)


# ---------------------------------------------------------------------------
# Plain 2x2 matrices over K (rows of FieldElements).  The verification
# identities conjugate by matrices of determinant != 1, so these helpers
# stay free of the SL2 constraint.

def m2(a, b, c, d):
    return ((a, b), (c, d))


def m2_identity(field):
    return m2(field.one, field.zero, field.zero, field.one)


def m2_mul(x, y):
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h),
            (c * e + d * g, c * f + d * h))


def m2_det(x):
    (a, b), (c, d) = x
    return a * d - b * c


def m2_inv(x):
    (a, b), (c, d) = x
    det = m2_det(x)
    inv = det.inverse()
    return ((d * inv, -b * inv), (-c * inv, a * inv))


def m2_pow(x, k, field):
    if k < 0:
        return m2_pow(m2_inv(x), -k, field)
    out = m2_identity(field)
    base = x
    while k:
        if k & 1:
            out = m2_mul(out, base)
        base = m2_mul(base, base)
        k >>= 1
    return out


def m2_eq(x, y):
    return all(x[i][j] == y[i][j] for i in range(2) for j in range(2))


def m2_serialize(x):
    return [[x[0][0].serialize(), x[0][1].serialize()],
            [x[1][0].serialize(), x[1][1].serialize()]]


class SL2Element:
    """A 2x2 matrix over K with determinant exactly 1."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = (tuple(rows[0]), tuple(rows[1]))
        if m2_det(self.rows) != field.one:
            raise ValueError("determinant must be 1")

    @classmethod
    def identity(cls, field):
        return cls(field, m2_identity(field))

    def __mul__(self, other):
        return SL2Element(self.field, m2_mul(self.rows, other.rows))

    def inverse(self):
        return SL2Element(self.field, m2_inv(self.rows))

    def __pow__(self, k):
        return SL2Element(self.field, m2_pow(self.rows, k, self.field))

    def __eq__(self, other):
        return isinstance(other, SL2Element) and m2_eq(self.rows, other.rows)

    def __hash__(self):
        return hash(self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def serialize(self):
        return m2_serialize(self.rows)

    def __repr__(self):
        return f"SL2Element({self.rows[0]!r}, {self.rows[1]!r})"


# ---------------------------------------------------------------------------
# Classification.

class CaseInfo:
    __slots__ = ("case", "rank", "subfield_ranks", "cm", "case2_subfield")

    def __init__(self, case, rank, subfield_ranks, cm, case2_subfield):
        self.case = case
        self.rank = rank
        self.subfield_ranks = subfield_ranks
        self.cm = cm
        self.case2_subfield = case2_subfield

    def serialize(self):
        out = {
            "case": self.case,
            "s_unit_rank": self.rank,
            "subfield_ranks": [
                {"poly": list(F.subfield.poly), "rank_of_intersection": r}
                for F, r in self.subfield_ranks],
        }
        if self.cm is not None:
            out["cm"] = self.cm.serialize()
        return out


def split_prime_check(field, S, F_desc):
    """True when no finite prime of S(F) splits in K (each has a single
    prime of K above it, necessarily the member of S it came from)."""
    SF = contract_prime_set(S, F_desc)
    for q in SF.finite:
        above = primes_above(field, q, F_desc)
        if len(above) != 1:
            return False
        if not S.contains(above[0]):
            return False
    return True


def classify_case(field, S, subfields=None, *, sbasis=None):
    """Decide which construction applies.

    Strict rank inequality everywhere gives Case 1.  Equality at some
    subfield is only coherent when that subfield is the totally real
    half of a CM structure and no finite prime of S(F) splits; anything
    else is reported as an inconsistency rather than silently patched.
    """
    if sbasis is None:
        sbasis = s_unit_basis(field, S)
    if subfields is None:
        subfields = default_subfields(field)
    rank = sbasis.rank
    ranks = []
    attained = []
    for F in subfields:
        ri = rank_of_intersection(field, S, F)
        ranks.append((F, ri))
        if ri > rank:
            raise InconsistentCM(
                f"intersection rank {ri} exceeds the S-unit rank {rank}")
        if ri == rank:
            attained.append(F)
    if not attained:
        return CaseInfo(1, rank, ranks, is_cm(field), None)
    cm = is_cm(field)
    if cm is None:
        raise InconsistentCM(
            "the S-unit rank is attained by a subfield but the field has "
            "no CM structure")
    # the totally real subfield of a CM field is unique, so matching
    # minimal polynomials identifies it regardless of which conjugate
    # root the caller's descriptor embeds through
    chosen = None
    for F in attained:
        if tuple(F.subfield.poly) == tuple(cm.F.subfield.poly):
            chosen = F
            break
    if chosen is None:
        raise InconsistentCM(
            "the rank is attained only by subfields other than the totally "
            "real CM subfield")
    if not split_prime_check(field, S, chosen):
        raise HypothesisFails(
            "a finite prime below S splits in K, which contradicts the "
            "attained rank bound")
    return CaseInfo(2, rank, ranks, cm, chosen)


# ---------------------------------------------------------------------------
# The triple.

class GeneratorTriple:
    __slots__ = ("field", "S", "h", "case_info", "alpha_cert", "alpha_in_K",
                 "gamma", "psi1", "psi2", "sbasis")

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def matrices(self):
        return (self.gamma, self.psi1, self.psi2)

    def serialize(self):
        out = {
            "case": self.case_info.case,
            "h": self.h,
            "classification": self.case_info.serialize(),
            "alpha": self.alpha_cert.serialize(),
            "gamma": self.gamma.serialize(),
            "psi1": self.psi1.serialize(),
            "psi2": self.psi2.serialize(),
        }
        if self.case_info.case == 2:
            out["alpha_in_K"] = self.alpha_in_K.serialize()
        return out


def build_generators(field, S, h=1, subfields=None, *, max_shell=32,
                     level_bound=12):
    """The triple (gamma, psi1, psi2) for O_S, with exponent h >= 1."""
    if h < 1:
        raise ValueError("h must be a positive integer")
    sbasis = s_unit_basis(field, S)
    info = classify_case(field, S, subfields, sbasis=sbasis)
    hK = field.from_rational(h)
    if info.case == 1:
        cert = choose_alpha(field, S, subfields, sbasis=sbasis,
                            max_shell=max_shell, level_bound=level_bound)
        alpha_K = cert.alpha
        psi2_top = hK
    else:
        F = info.case2_subfield
        SF = contract_prime_set(S, F)
        cert = choose_alpha(F.subfield, SF, max_shell=max_shell,
                            level_bound=level_bound)
        alpha_K = F.map_element(cert.alpha)
        psi2_top = hK * info.cm.sqrt_minus_d
    ah = alpha_K ** h
    gamma = SL2Element(field, ((ah, field.zero), (field.zero, ah.inverse())))
    psi1 = SL2Element(field, ((field.one, field.zero), (hK, field.one)))
    psi2 = SL2Element(field, ((field.one, psi2_top), (field.zero, field.one)))
    return GeneratorTriple(field=field, S=S, h=h, case_info=info,
                           alpha_cert=cert, alpha_in_K=alpha_K, gamma=gamma,
                           psi1=psi1, psi2=psi2, sbasis=sbasis)
