"""Exact linear algebra: rational matrices and integer row lattices.

Matrices are lists of row lists.  Lattices are spans of integer rows;
the canonical form is the row Hermite normal form (echelon, positive
pivots, entries above a pivot reduced into [0, pivot)), which is unique
per row span, so equality of spans is equality of forms.
"""

from fractions import Fraction
from math import gcd


def xgcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# Hermite normal form.

def _pivot(row):
    for i, x in enumerate(row):
        if x:
            return i
    return None


def hnf(rows):
    """Canonical HNF of the span of the given integer rows (zero rows dropped)."""
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    result = []
    for col in range(ncols):
        rest = []
        carrier = None
        for r in work:
            if r[col] == 0:
                rest.append(r)
            elif carrier is None:
                carrier = r
            else:
                g, s, t = xgcd(carrier[col], r[col])
                a, b = carrier[col] // g, r[col] // g
                comb = [s * x + t * y for x, y in zip(carrier, r)]
                left = [a * y - b * x for x, y in zip(carrier, r)]
                carrier = comb
                if any(left):
                    rest.append(left)
        if carrier is not None:
            if carrier[col] < 0:
                carrier = [-x for x in carrier]
            result.append(carrier)
        work = rest
    # reduce entries above each pivot into [0, pivot)
    for j in range(1, len(result)):
        pc = _pivot(result[j])
        piv = result[j][pc]
        for i in range(j):
            q = result[i][pc] // piv
            if q:
                result[i] = [x - q * y for x, y in zip(result[i], result[j])]
    return [tuple(r) for r in result]


def hnf_with_transform(rows):
    """(H, T, kernel): H = canonical HNF, T integer rows with T @ rows = H,
    kernel = basis of {x : x @ rows = 0}."""
    orig = [list(map(int, r)) for r in rows]
    m = len(orig)
    work = []
    kernel = []
    for i, r in enumerate(orig):
        t = [0] * m
        t[i] = 1
        if any(r):
            work.append((r, t))
        else:
            kernel.append(t)
    if not work:
        return [], [], kernel
    ncols = len(orig[0])
    result = []
    for col in range(ncols):
        rest = []
        carrier = None
        for r, t in work:
            if r[col] == 0:
                rest.append((r, t))
            elif carrier is None:
                carrier = (r, t)
            else:
                cr, ct = carrier
                g, s, u = xgcd(cr[col], r[col])
                a, b = cr[col] // g, r[col] // g
                comb = [s * x + u * y for x, y in zip(cr, r)]
                combt = [s * x + u * y for x, y in zip(ct, t)]
                left = [a * y - b * x for x, y in zip(cr, r)]
                leftt = [a * y - b * x for x, y in zip(ct, t)]
                carrier = (comb, combt)
                if any(left):
                    rest.append((left, leftt))
                else:
                    kernel.append(leftt)
        if carrier is not None:
            r, t = carrier
            if r[col] < 0:
                r, t = [-x for x in r], [-x for x in t]
            result.append((r, t))
        work = rest
    for r, t in work:
        kernel.append(t)
    for j in range(1, len(result)):
        pc = _pivot(result[j][0])
        piv = result[j][0][pc]
        for i in range(j):
            q = result[i][0][pc] // piv
            if q:
                ri = [x - q * y for x, y in zip(result[i][0], result[j][0])]
                ti = [x - q * y for x, y in zip(result[i][1], result[j][1])]
                result[i] = (ri, ti)
    H = [tuple(r) for r, _ in result]
    T = [tuple(t) for _, t in result]
    return H, T, [tuple(k) for k in kernel]


def solve_hnf(H, vec):
    """Integer coefficients over the rows of an HNF matrix, or None."""
    v = list(map(int, vec))
    coeffs = [0] * len(H)
    for i, row in enumerate(H):
        pc = _pivot(row)
        if v[pc] % row[pc]:
            return None
        q = v[pc] // row[pc]
        coeffs[i] = q
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return coeffs if not any(v) else None


def in_lattice(H, vec):
    return solve_hnf(H, vec) is not None


def solve_in_terms_of(gens, vec):
    """Integer combination of the (arbitrary) generator rows equal to vec, or None."""
    H, T, _ = hnf_with_transform(gens)
    y = solve_hnf(H, vec)
    if y is None:
        return None
    out = [0] * len(gens)
    for yi, t in zip(y, T):
        for k, tk in enumerate(t):
            out[k] += yi * tk
    return out


def integer_kernel(rows):
    """Basis of {x : x @ rows = 0} over the integers."""
    _, _, kernel = hnf_with_transform(rows)
    return hnf(kernel) if kernel else []


def int_det(mat):
    """Determinant of a square integer matrix (Bareiss)."""
    a = [list(map(int, r)) for r in mat]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def lattice_index_hnf(H1, H2):
    """[span H1 : span H2] for HNF inputs.

    Returns a positive int, the string "infinite" on a rank drop, or
    None when H2 is not contained in H1.
    """
    coeffs = []
    for row in H2:
        c = solve_hnf(H1, row)
        if c is None:
            return None
        coeffs.append(c)
    if len(H2) < len(H1):
        return "infinite"
    d = int_det(coeffs)
    return abs(d) if d else "infinite"


def lattice_intersect(rows1, rows2):
    """HNF basis of the intersection of the two row spans."""
    m = [list(r) for r in rows1] + [[-x for x in r] for r in rows2]
    kern = integer_kernel(m)
    gens = []
    k1 = len(rows1)
    for k in kern:
        v = [0] * len(rows1[0])
        for c, row in zip(k[:k1], rows1):
            for j, x in enumerate(row):
                v[j] += c * x
        gens.append(v)
    return hnf(gens)


def lattice_sum(rows1, rows2):
    return hnf(list(rows1) + list(rows2))


def snf_invariants(mat):
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [list(map(int, r)) for r in mat]
    a = [r for r in a if any(r)]
    if not a:
        return []
    diag = []
    while a and any(any(r) for r in a):
        # move a minimal nonzero entry to (0, 0)
        best = None
        for i, r in enumerate(a):
            for j, x in enumerate(r):
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        i0, j0 = best
        a[0], a[i0] = a[i0], a[0]
        for r in a:
            r[0], r[j0] = r[j0], r[0]
        # clear row and column; restart if a remainder shrinks the pivot
        dirty = True
        while dirty:
            dirty = False
            piv = a[0][0]
            for i in range(1, len(a)):
                if a[i][0]:
                    q = a[i][0] // piv
                    a[i] = [x - q * y for x, y in zip(a[i], a[0])]
                    if a[i][0]:
                        a[0], a[i] = a[i], a[0]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(1, len(a[0])):
                if a[0][j]:
                    q = a[0][j] // piv
                    for r in a:
                        r[j] -= q * r[0]
                    if a[0][j]:
                        for r in a:
                            r[0], r[j] = r[j], r[0]
                        dirty = True
                        break
        diag.append(abs(a[0][0]))
        a = [r[1:] for r in a[1:]]
        a = [r for r in a if any(r)]
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            if diag[i + 1] % diag[i]:
                g = gcd(diag[i], diag[i + 1])
                diag[i], diag[i + 1] = g, diag[i] * diag[i + 1] // g
                changed = True
    return diag


# ---------------------------------------------------------------------------
# Rational matrices.

def mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def vec_mat(v, m):
    return [sum(x * row[j] for x, row in zip(v, m)) for j in range(len(m[0]))]


def mat_det(mat):
    a = [[Fraction(x) for x in r] for r in mat]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                c = a[i][k] * inv
                a[i] = [x - c * y for x, y in zip(a[i], a[k])]
    return det


def mat_inv(mat):
    """Inverse of a square rational matrix, or None if singular."""
    n = len(mat)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(mat)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                c = a[i][k]
                a[i] = [x - c * y for x, y in zip(a[i], a[k])]
    return [r[n:] for r in a]


def mat_rank(mat):
    a = [[Fraction(x) for x in r] for r in mat]
    rank = 0
    ncols = len(a[0]) if a else 0
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, len(a)):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col]:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[row])]
        row += 1
        rank += 1
    return rank


def span_coeffs(rows, target):
    """Rational coefficients c with sum c_i rows_i = target, or None."""
    if not rows:
        return None if any(target) else []
    ncols = len(rows[0])
    # solve rows^T c = target by elimination on the augmented transpose
    a = [[Fraction(rows[i][j]) for i in range(len(rows))] + [Fraction(target[j])]
         for j in range(ncols)]
    m = len(rows)
    pivots = []
    row = 0
    for col in range(m):
        piv = None
        for i in range(row, ncols):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(ncols):
            if i != row and a[i][col]:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    for i in range(row, ncols):
        if a[i][m]:
            return None
    out = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        out[col] = a[r][m]
    return out


# ---------------------------------------------------------------------------
# Rational lattices: integer row lattices scaled by a common denominator.

class RatLattice:
    """Finitely generated subgroup of Q^n, stored as hnf_rows / den.

    The stored pair is normalized (gcd of den and all entries is 1), so
    equal subgroups have equal representations.
    """

    __slots__ = ("den", "rows", "ncols")

    def __init__(self, den, rows, ncols):
        g = den
        for r in rows:
            for x in r:
                g = gcd(g, x)
        if g > 1:
            den //= g
            rows = [tuple(x // g for x in r) for r in rows]
        self.den = den
        self.rows = tuple(tuple(r) for r in rows)
        self.ncols = ncols

    @classmethod
    def from_rows(cls, frac_rows, ncols=None):
        frac_rows = [[Fraction(x) for x in r] for r in frac_rows]
        if ncols is None:
            ncols = len(frac_rows[0]) if frac_rows else 0
        den = 1
        for r in frac_rows:
            for x in r:
                den = den * x.denominator // gcd(den, x.denominator)
        scaled = [[int(x * den) for x in r] for r in frac_rows]
        return cls(den, hnf(scaled), ncols)

    def rank(self):
        return len(self.rows)

    def _common(self, other):
        if self.ncols != other.ncols:
            raise ValueError("ambient dimension mismatch")
        d = self.den * other.den // gcd(self.den, other.den)
        a = [[x * (d // self.den) for x in r] for r in self.rows]
        b = [[x * (d // other.den) for x in r] for r in other.rows]
        return a, b

    def index_in(self, other):
        """[other : self]; int, "infinite", or None when not contained."""
        a, b = self._common(other)
        return lattice_index_hnf(hnf(b), hnf(a))

    def contains(self, other):
        a, b = self._common(other)
        ha = hnf(a)
        return all(in_lattice(ha, r) for r in b)

    def contains_vec(self, vec):
        v = [Fraction(x) * self.den for x in vec]
        if any(x.denominator != 1 for x in v):
            return False
        return in_lattice(list(self.rows), [int(x) for x in v])

    def intersect(self, other):
        a, b = self._common(other)
        d = self.den * other.den // gcd(self.den, other.den)
        return RatLattice(d, lattice_intersect(a, b) if a and b else [], self.ncols)

    def add(self, other):
        a, b = self._common(other)
        d = self.den * other.den // gcd(self.den, other.den)
        return RatLattice(d, lattice_sum(a, b), self.ncols)

    def scale(self, c):
        c = Fraction(c)
        rows = [[Fraction(x, self.den) * c for x in r] for r in self.rows]
        return RatLattice.from_rows(rows, self.ncols)

    def frac_rows(self):
        return [[Fraction(x, self.den) for x in r] for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, RatLattice) and self.den == other.den
                and self.rows == other.rows and self.ncols == other.ncols)

    def __hash__(self):
        return hash((self.den, self.rows, self.ncols))

    def __repr__(self):
        return f"RatLattice(1/{self.den} * {[list(r) for r in self.rows]})"
