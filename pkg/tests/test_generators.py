from fractions import Fraction

import pytest

from sgen2.errors import InconsistentCM
from sgen2.field import create_field
from sgen2.generators import (SL2Element, build_generators, classify_case,
                              split_prime_check)
from sgen2.ideals import factor_rational_prime
from sgen2.sunits import (PrimeSet, SubfieldDescriptor, default_subfields,
                          rational_subfield, s_unit_basis)

from instances import (ALL, gaussian_five, gaussian_two, rational_two,
                       sqrt2_seven, sqrt5_two, zeta5_nofinite)


# ---------------------------------------------------------------------------
# SL2 elements.

def test_sl2_determinant_enforced():
    k = create_field([1, 0, 1])
    with pytest.raises(ValueError):
        SL2Element(k, ((k.one, k.zero), (k.zero, k.from_rational(2))))
    m = SL2Element(k, ((k.from_rational(2), k.one),
                       (k.one, k.one)))
    assert (m * m.inverse()).rows == SL2Element.identity(k).rows


def test_sl2_group_ops():
    k = create_field([-1, 1])
    half = k.from_rational(Fraction(1, 2))
    g = SL2Element(k, ((half, k.zero), (k.zero, k.from_rational(2))))
    assert (g ** 3).entry(0, 0) == k.from_rational(Fraction(1, 8))
    assert (g ** -3) == (g ** 3).inverse()
    assert g ** 0 == SL2Element.identity(k)


# ---------------------------------------------------------------------------
# Classification.

def test_classification_goldens():
    expected = {
        rational_two: (1, 1, None),
        gaussian_two: (2, 1, (-1, 1)),
        gaussian_five: (1, 2, None),
        sqrt2_seven: (1, 2, None),
        sqrt5_two: (1, 2, None),
        zeta5_nofinite: (2, 1, (-5, 0, 1)),
    }
    for make, (case, rank, f_poly) in expected.items():
        k, S = make()
        info = classify_case(k, S)
        assert info.case == case, make.__name__
        assert info.rank == rank
        if f_poly is None:
            assert info.case2_subfield is None
        else:
            assert info.case2_subfield.subfield.poly == f_poly


def test_classification_rank_table():
    k, S = zeta5_nofinite()
    info = classify_case(k, S)
    assert [(F.subfield.poly, r) for F, r in info.subfield_ranks] == \
        [((-1, 1), 0), ((-5, 0, 1), 1)]


def test_split_prime_check():
    k, S = gaussian_five()
    # 5 splits: its contraction has two primes of K above it
    assert not split_prime_check(k, S, rational_subfield(k))
    k, S = gaussian_two()
    assert split_prime_check(k, S, rational_subfield(k))
    kz, Sz = zeta5_nofinite()
    assert split_prime_check(kz, Sz, default_subfields(kz)[1])


def test_classification_guard_on_mismatched_basis():
    k = create_field([1, 0, 1])
    small = PrimeSet(k, list(factor_rational_prime(k, 2)))
    big = PrimeSet(k, list(factor_rational_prime(k, 2))
                   + list(factor_rational_prime(k, 5)))
    with pytest.raises(InconsistentCM):
        classify_case(k, big, sbasis=s_unit_basis(k, small))


def test_cm_subfield_matched_by_polynomial():
    # a descriptor through the conjugate root of x^2 - 5 names the same
    # subfield and must classify identically
    kz, Sz = zeta5_nofinite()
    conj = SubfieldDescriptor(kz, create_field([-5, 0, 1]),
                              kz.element([1, 0, 2, 2]))
    info = classify_case(kz, Sz, subfields=[conj])
    assert info.case == 2
    assert info.case2_subfield is conj


# ---------------------------------------------------------------------------
# The triples.

def test_triple_rational():
    k, S = rational_two()
    t = build_generators(k, S)
    half = k.from_rational(Fraction(1, 2))
    assert t.gamma.rows == ((half, k.zero), (k.zero, k.from_rational(2)))
    assert t.psi1.rows == ((k.one, k.zero), (k.one, k.one))
    assert t.psi2.rows == ((k.one, k.one), (k.zero, k.one))
    assert t.case_info.case == 1 and t.h == 1
    assert t.alpha_in_K == half


def test_triple_gaussian_two_case2():
    k, S = gaussian_two()
    t = build_generators(k, S)
    half = k.from_rational(Fraction(1, 2))
    # alpha lives in Q and maps up; psi2 carries h * sqrt(-d) = i
    assert t.alpha_cert.field.degree == 1
    assert t.alpha_in_K == half
    assert t.gamma.rows[0][0] == half
    assert t.gamma.rows[1][1] == k.from_rational(2)
    assert t.psi2.rows == ((k.one, k.theta), (k.zero, k.one))
    assert t.psi1.rows == ((k.one, k.zero), (k.one, k.one))


def test_triple_gaussian_five():
    k, S = gaussian_five()
    t = build_generators(k, S)
    assert t.alpha_in_K.serialize() == ["1/25", "2/25"]
    assert t.gamma.rows[0][0] == t.alpha_in_K
    assert t.gamma.rows[1][1] == t.alpha_in_K.inverse()
    assert t.gamma.rows[1][1].serialize() == ["5", "-10"]
    assert t.psi2.rows[0][1] == k.one


def test_triple_zeta5():
    kz, Sz = zeta5_nofinite()
    t = build_generators(kz, Sz)
    assert t.case_info.case == 2
    # alpha is the fundamental unit of the real subfield, mapped up
    assert t.alpha_cert.alpha.serialize() == ["1/2", "1/2"]
    assert t.alpha_in_K.serialize() == ["0", "0", "-1", "-1"]
    assert t.psi2.rows[0][1] == t.case_info.cm.sqrt_minus_d
    assert t.psi2.rows[0][1].serialize() == ["1", "2", "1", "1"]
    # gamma's entries are units: no finite primes in S at all
    assert t.alpha_in_K.is_integral()
    assert abs(t.alpha_in_K.norm()) == 1


def test_triple_h_exponent():
    k, S = sqrt5_two()
    t = build_generators(k, S, h=2)
    assert t.gamma.rows[0][0].serialize() == ["3/8", "-1/8"]
    assert t.gamma.rows[1][1].serialize() == ["6", "2"]
    assert t.psi1.rows[1][0] == k.from_rational(2)
    assert t.psi2.rows[0][1] == k.from_rational(2)
    with pytest.raises(ValueError):
        build_generators(k, S, h=0)


def test_triple_determinants():
    for make in ALL:
        k, S = make()
        t = build_generators(k, S)
        for m in t.matrices():
            d = m.rows[0][0] * m.rows[1][1] - m.rows[0][1] * m.rows[1][0]
            assert d == k.one


def test_triple_conjugate_descriptor_builds():
    kz, Sz = zeta5_nofinite()
    conj = SubfieldDescriptor(kz, create_field([-5, 0, 1]),
                              kz.element([1, 0, 2, 2]))
    t = build_generators(kz, Sz, subfields=[conj])
    assert t.alpha_in_K.serialize() == ["1", "0", "1", "1"]
    assert abs(t.alpha_in_K.norm()) == 1


def test_serialize_shape():
    k, S = gaussian_two()
    t = build_generators(k, S)
    out = t.serialize()
    assert out["case"] == 2
    assert out["alpha_in_K"] == ["1/2", "0"]
    assert set(out) >= {"case", "h", "classification", "alpha",
                        "gamma", "psi1", "psi2"}
