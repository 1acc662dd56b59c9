"""Number fields K = Q[x]/(f) with exact power-basis arithmetic.

Elements carry rational coordinates with respect to the power basis
1, t, ..., t^(n-1) of a fixed root t of the monic defining polynomial.
Integrality is referred to the field's integral basis: a matrix whose
rows are power-basis coordinates of a Z-basis of the maximal order,
first row equal to 1.

Degree <= 2 fields get their integral basis, discriminant and (in the
real quadratic case) fundamental unit computed from scratch; higher
degree fields must supply a datasheet carrying the integral basis and
the other global data that cannot be recomputed here.  Everything a
datasheet asserts is either verified exactly on load or verified at
first use; the two quantities that cannot be checked without analytic
input (multiplicative independence of the declared units, minimality
of declared class orders) are accepted as asserted.
"""

from fractions import Fraction
from math import gcd, isqrt

from . import linalg, polys
from .errors import (DatasheetInvalid, DatasheetRequired, DivisionByZero,
                     NotMonic, Reducible)


def parse_rational(v):
    """Accept ints, Fractions, and 'p/q' strings."""
    if isinstance(v, bool):
        raise DatasheetInvalid(f"not a rational: {v!r}")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise DatasheetInvalid(f"not a rational: {v!r}") from None
    raise DatasheetInvalid(f"not a rational: {v!r}")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul_coords(self.coords, o.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.field, self.field._inv_coords(self.coords))

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.field), self.coords))

    def mult_matrix(self):
        """Rows are power-basis coordinates of self * t**i."""
        rows = [list(self.coords)]
        for _ in range(self.field.degree - 1):
            rows.append(self.field._times_theta(rows[-1]))
        return rows

    def norm(self):
        return linalg.mat_det(self.mult_matrix())

    def trace(self):
        m = self.mult_matrix()
        return sum(m[i][i] for i in range(len(m)))

    def minimal_poly(self):
        """Monic minimal polynomial, constant coefficient first."""
        n = self.field.degree
        powers = [self.field.one.coords]
        cur = self.field.one
        for k in range(1, n + 1):
            cur = cur * self
            c = linalg.span_coeffs([list(p) for p in powers], list(cur.coords))
            if c is not None:
                return tuple([-x for x in c] + [Fraction(1)])
            powers.append(cur.coords)
        raise AssertionError("no dependence among n+1 powers")

    def ib_coords(self):
        """Coordinates with respect to the integral basis."""
        return tuple(linalg.vec_mat(list(self.coords), self.field._ib_inv))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.ib_coords())

    def denominator_to_basis(self):
        """Smallest positive integer d with d * self in the maximal order."""
        d = 1
        for c in self.ib_coords():
            d = d * c.denominator // gcd(d, c.denominator)
        return d

    def as_rational(self):
        """The element as a Fraction if it lies in Q, else None."""
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def serialize(self):
        return [format_rational(c) for c in self.coords]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
            else:
                var = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{format_rational(c)}*{var}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


class EmbeddingData:
    """Isolating intervals for the real roots of the defining polynomial."""

    __slots__ = ("real_roots", "complex_pairs", "precision_bits")

    def __init__(self, real_roots, complex_pairs, precision_bits):
        self.real_roots = tuple(real_roots)
        self.complex_pairs = complex_pairs
        self.precision_bits = precision_bits

    def serialize(self):
        return {
            "real_roots": [[format_rational(a), format_rational(b)]
                           for a, b in self.real_roots],
            "complex_pairs": self.complex_pairs,
            "precision_bits": self.precision_bits,
        }


class NumberField:
    def __init__(self, poly, integral_basis, signature, field_discriminant,
                 tier, irreducibility, embeddings, datasheet=None):
        self.poly = tuple(int(c) for c in poly)
        self.degree = len(self.poly) - 1
        self.integral_basis = tuple(tuple(Fraction(x) for x in row) for row in integral_basis)
        self.signature = signature
        self.field_discriminant = field_discriminant
        self.tier = tier
        self.irreducibility = irreducibility
        self.embeddings = embeddings
        self.datasheet = datasheet
        n = self.degree
        # power-basis coordinates of t**(n+k), k = 0..n-2
        red = []
        prev = [-Fraction(c) for c in self.poly[:-1]]
        red.append(prev)
        for _ in range(n - 2):
            prev = self._times_theta_raw(prev, red[0])
            red.append(prev)
        self._red = [tuple(r) for r in red]
        self._ib_inv = linalg.mat_inv([list(r) for r in self.integral_basis])
        if self._ib_inv is None:
            raise DatasheetInvalid("integral basis is singular")
        self.zero = FieldElement(self, [0] * n)
        self.one = self.from_rational(1)
        self.theta = FieldElement(self, [0, 1] + [0] * (n - 2)) if n >= 2 else self.one
        # integer structure constants over the integral basis
        self.mult_table = self._build_mult_table()
        self._fund_unit = None
        self._quad = None  # (m, f_theta) for degree 2

    # -- coordinate plumbing -------------------------------------------------

    @staticmethod
    def _times_theta_raw(coords, red0):
        n = len(coords)
        out = [Fraction(0)] + list(coords[:-1])
        top = coords[-1]
        if top:
            out = [a + top * b for a, b in zip(out, red0)]
        return out

    def _times_theta(self, coords):
        return self._times_theta_raw(list(coords), self._red[0])

    def _mul_coords(self, a, b):
        n = self.degree
        if n == 1:
            return (a[0] * b[0],)
        conv = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:n]
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c:
                row = self._red[k - n]
                out = [o + c * r for o, r in zip(out, row)]
        return tuple(out)

    def _inv_coords(self, a):
        m = [list(r) for r in FieldElement(self, a).mult_matrix()]
        inv = linalg.mat_inv(m)
        if inv is None:
            raise DivisionByZero("inverse of zero divisor")
        # solve y * M = e0, i.e. y = e0 * M^-1 = first row of M^-1
        return tuple(inv[0][j] for j in range(self.degree))

    def _build_mult_table(self):
        n = self.degree
        basis = [FieldElement(self, row) for row in self.integral_basis]
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                prod = basis[i] * basis[j]
                c = prod.ib_coords()
                if any(x.denominator != 1 for x in c):
                    raise DatasheetInvalid(
                        "integral basis not closed under multiplication")
                row.append(tuple(int(x) for x in c))
            table.append(row)
        return table

    # -- constructors --------------------------------------------------------

    def element(self, coords):
        return FieldElement(self, coords)

    def from_rational(self, q):
        return FieldElement(self, [Fraction(q)] + [Fraction(0)] * (self.degree - 1))

    def from_ib(self, coords):
        out = [Fraction(0)] * self.degree
        for c, row in zip(coords, self.integral_basis):
            if c:
                out = [o + Fraction(c) * r for o, r in zip(out, row)]
        return FieldElement(self, out)

    def basis_element(self, i):
        return FieldElement(self, self.integral_basis[i])

    # -- global data ---------------------------------------------------------

    def trace_gram(self):
        basis = [self.basis_element(i) for i in range(self.degree)]
        return [[(basis[i] * basis[j]).trace() for j in range(self.degree)]
                for i in range(self.degree)]

    def is_quadratic_real(self):
        return self.degree == 2 and self.signature == (2, 0)

    def is_totally_imaginary(self):
        return self.signature[0] == 0

    def sqrt_disc_core(self):
        """For degree 2: the element sqrt(m), m the squarefree core."""
        m, f_theta = self._quad
        b = self.poly[1]
        return FieldElement(self, [Fraction(b, f_theta), Fraction(2, f_theta)])

    def serialize(self):
        return {
            "poly": list(self.poly),
            "degree": self.degree,
            "signature": list(self.signature),
            "discriminant": self.field_discriminant,
            "integral_basis": [[format_rational(x) for x in row]
                               for row in self.integral_basis],
            "tier": self.tier,
            "irreducibility": self.irreducibility,
        }

    def __repr__(self):
        return f"NumberField({list(self.poly)})"


# ---------------------------------------------------------------------------
# Construction.

def _irreducibility_screen(poly):
    """"proved" or "asserted"; raises Reducible when a factor is found."""
    n = len(poly) - 1
    if n == 1:
        return "proved"
    g = polys.pgcd(poly, polys.pderiv(poly))
    if polys.degree(g) > 0:
        raise Reducible(f"square factor detected: gcd with derivative {g}")
    roots = polys.integer_roots(list(poly))
    if roots:
        raise Reducible(f"integer root {roots[0]}")
    if n <= 3:
        # a reducible monic integer quadratic or cubic has an integer root
        return "proved"
    for p in polys.primes_below(100):
        fp = polys.pp_trim(list(poly), p)
        if polys.degree(fp) != n:
            continue
        d = polys.pp_gcd(fp, polys.pp_trim(polys.pderiv(fp), p), p)
        if polys.degree(d) != 0:
            continue
        if polys.is_irreducible_mod_p(list(poly), p):
            return "proved"
    return "asserted"


def _quadratic_integral_data(poly):
    """(m, f_theta, integral_basis_rows, field_disc) for x^2 + b x + c."""
    b, c = poly[1], poly[0]
    disc_poly = b * b - 4 * c
    m = polys.squarefree_part(disc_poly)
    f_theta = isqrt(disc_poly // m)
    if m % 4 == 1:
        # omega = (1 + sqrt(m)) / 2, sqrt(m) = (2 t + b) / f_theta
        row = (Fraction(f_theta + b, 2 * f_theta), Fraction(1, f_theta))
        disc = m
    else:
        row = (Fraction(b, f_theta), Fraction(2, f_theta))
        disc = 4 * m
    basis = [(Fraction(1), Fraction(0)), row]
    return m, f_theta, basis, disc


def _validate_datasheet_shape(ds):
    if not isinstance(ds, dict):
        raise DatasheetInvalid("datasheet must be an object")
    allowed = {"integral_basis", "fundamental_units", "subfields", "class_orders"}
    extra = set(ds) - allowed
    if extra:
        raise DatasheetInvalid(f"unknown datasheet keys: {sorted(extra)}")
    if "integral_basis" not in ds:
        raise DatasheetInvalid("datasheet lacks integral_basis")


def create_field(poly, datasheet=None, precision_bits=32):
    """Build a NumberField from a monic integer polynomial.

    Degree 1 and 2 need no datasheet.  Higher degrees require one; its
    integral basis is verified (unit first row, contains Z[t], closed
    under multiplication, integral trace Gram with determinant of the
    right sign).
    """
    try:
        coeffs = [Fraction(c) for c in poly]
    except (TypeError, ValueError):
        raise NotMonic("coefficients must be integers") from None
    if any(c.denominator != 1 for c in coeffs):
        raise NotMonic("coefficients must be integers")
    poly = polys.trim([int(c) for c in coeffs])
    if len(poly) < 2:
        raise NotMonic("degree must be at least 1")
    if poly[-1] != 1:
        raise NotMonic(f"leading coefficient {poly[-1]}")
    n = len(poly) - 1

    irreducibility = _irreducibility_screen(poly)

    r1 = polys.count_real_roots(poly)
    if (n - r1) % 2:
        raise AssertionError("signature parity")
    sig = (r1, (n - r1) // 2)
    emb = EmbeddingData(polys.isolate_real_roots(poly, precision_bits),
                        sig[1], precision_bits)

    quad = None
    if n == 1:
        basis = [(Fraction(1),)]
        disc = 1
        tier = "automatic"
        ds_norm = None
    elif n == 2:
        m, f_theta, basis, disc = _quadratic_integral_data(poly)
        quad = (m, f_theta)
        tier = "automatic"
        ds_norm = None
    else:
        if datasheet is None:
            raise DatasheetRequired(f"degree {n} needs a datasheet")
        _validate_datasheet_shape(datasheet)
        datasheet = dict(datasheet)  # never mutate caller data
        basis = []
        raw = datasheet["integral_basis"]
        if not (isinstance(raw, list) and len(raw) == n):
            raise DatasheetInvalid("integral_basis must have one row per degree")
        for row in raw:
            if not (isinstance(row, list) and len(row) == n):
                raise DatasheetInvalid("integral_basis rows must have length n")
            basis.append(tuple(parse_rational(x) for x in row))
        if basis[0] != tuple([Fraction(1)] + [Fraction(0)] * (n - 1)):
            raise DatasheetInvalid("first basis row must be 1")
        inv = linalg.mat_inv([list(r) for r in basis])
        if inv is None:
            raise DatasheetInvalid("integral basis is singular")
        for row in inv:
            if any(x.denominator != 1 for x in row):
                raise DatasheetInvalid("integral basis does not contain Z[t]")
        disc = None  # computed from the trace Gram below
        tier = "datasheet"
        ds_norm = datasheet

    field = NumberField(poly, basis, sig, disc, tier, irreducibility, emb,
                        datasheet=ds_norm)
    field._quad = quad

    gram = field.trace_gram()
    for row in gram:
        for x in row:
            if Fraction(x).denominator != 1:
                raise DatasheetInvalid("trace Gram is not integral")
    gram_det = linalg.mat_det(gram)
    if gram_det == 0:
        raise DatasheetInvalid("trace Gram is singular")
    gram_det = int(gram_det)
    if disc is None:
        field.field_discriminant = gram_det
    elif gram_det != disc:
        raise AssertionError("discriminant mismatch between rule and trace Gram")
    if (field.field_discriminant < 0) != (sig[1] % 2 == 1):
        raise DatasheetInvalid("discriminant sign inconsistent with signature")

    if ds_norm is not None:
        _validate_datasheet_content(field, ds_norm)
    return field


def _validate_datasheet_content(field, ds):
    n = field.degree
    units = ds.get("fundamental_units", [])
    if not isinstance(units, list):
        raise DatasheetInvalid("fundamental_units must be a list")
    expected = field.signature[0] + field.signature[1] - 1
    if len(units) != expected:
        raise DatasheetInvalid(
            f"expected {expected} fundamental units, got {len(units)}")
    parsed_units = []
    for u in units:
        el = field.element([parse_rational(x) for x in u])
        if not el.is_integral() or abs(el.norm()) != 1:
            raise DatasheetInvalid(f"not a unit: {u}")
        parsed_units.append(el)
    ds["fundamental_units"] = parsed_units

    subs = ds.get("subfields", [])
    if not isinstance(subs, list):
        raise DatasheetInvalid("subfields must be a list")
    for s in subs:
        if not isinstance(s, dict) or set(s) - {"poly", "embedding"} or \
                "poly" not in s or "embedding" not in s:
            raise DatasheetInvalid("subfield entries need poly and embedding")
        g = field.element([parse_rational(x) for x in s["embedding"]])
        mp = g.minimal_poly()
        declared = [Fraction(int(c)) for c in s["poly"]]
        if list(mp) != declared:
            raise DatasheetInvalid(
                f"embedding does not satisfy the declared polynomial {s['poly']}")
        if (len(declared) - 1) == 0 or n % (len(declared) - 1):
            raise DatasheetInvalid("subfield degree must divide the field degree")

    orders = ds.get("class_orders", [])
    if not isinstance(orders, list):
        raise DatasheetInvalid("class_orders must be a list")
    for entry in orders:
        if not isinstance(entry, dict) or set(entry) != {"ideal", "order", "generator"}:
            raise DatasheetInvalid("class_orders entries need ideal, order, generator")
        if not isinstance(entry["order"], int) or entry["order"] < 1:
            raise DatasheetInvalid("class order must be a positive integer")


def signature(field):
    return field.signature


# ---------------------------------------------------------------------------
# Fundamental unit of a real quadratic field.

def _pell_fundamental(m):
    """Smallest (x, y), x, y > 0, with x^2 - m y^2 = +-1 (m > 1 nonsquare)."""
    a0 = isqrt(m)
    P, Q, a = 0, 1, a0
    p0, p1 = 1, a0
    q0, q1 = 0, 1
    while True:
        P = a * Q - P
        Q = (m - P * P) // Q
        if Q == 1:
            return p1, q1
        a = (P + a0) // Q
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0


def fundamental_unit(field):
    """A fundamental unit of a real quadratic field, normalized > 1.

    Continued fractions give the smallest unit of Z[sqrt(m)]; when
    m = 5 mod 8 the maximal order can be strictly larger, by an index
    dividing 3, so an exact cube root is attempted.
    """
    if not field.is_quadratic_real():
        raise ValueError("fundamental_unit needs a real quadratic field")
    if field._fund_unit is not None:
        return field._fund_unit
    m, _ = field._quad
    x1, y1 = _pell_fundamental(m)
    sqrt_m = field.sqrt_disc_core()
    eps = field.from_rational(x1) + field.from_rational(y1) * sqrt_m
    if m % 8 == 5:
        # try eps = eps0^3 with eps0 = (a + b sqrt(m)) / 2
        target = 2 * x1
        base = polys.icbrt(target)
        for a in range(max(base - 2, 1), base + 3):
            for s in (1, -1):
                if a * (a * a - 3 * s) != target:
                    continue
                den = a * a - s
                if den == 0 or (2 * y1) % den:
                    continue
                b = 2 * y1 // den
                if b <= 0 or (a - b) % 2:
                    continue
                cand = (field.from_rational(a) + field.from_rational(b) * sqrt_m) \
                    * Fraction(1, 2)
                if cand.norm() == s and cand ** 3 == eps:
                    field._fund_unit = cand
                    return cand
    field._fund_unit = eps
    return eps
