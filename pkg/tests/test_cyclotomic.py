import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primhom.cyclotomic import NOT_A_ROOT, Cyclotomic, E, parse_cyclotomic, zumbroich_basis

CONDUCTORS = [1, 3, 4, 5, 8, 9, 12, 15, 16, 20, 24]


@st.composite
def cyclotomics(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    terms = draw(st.dictionaries(st.integers(0, max(n - 1, 0)),
                                 st.fractions(min_value=-5, max_value=5, max_denominator=4),
                                 max_size=4))
    return Cyclotomic.from_exponents(n, terms)


def approx(z: Cyclotomic) -> complex:
    return complex(z)


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-9 * max(1.0, abs(a), abs(b))


@settings(max_examples=150, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a + 0 == a


@settings(max_examples=150, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_matches_complex_arithmetic(a, b):
    assert close(approx(a + b), approx(a) + approx(b))
    assert close(approx(a * b), approx(a) * approx(b))
    assert close(approx(a.conjugate()), approx(a).conjugate())


@settings(max_examples=100, deadline=None)
@given(cyclotomics())
def test_inverse(a):
    if a == 0:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1
        assert a / a == 1


@settings(max_examples=100, deadline=None)
@given(cyclotomics())
def test_canonical_form_is_idempotent(a):
    again = Cyclotomic.from_exponents(a.conductor, dict(a.coefficients))
    assert again == a
    assert str(again) == str(a)
    assert hash(again) == hash(a)
    assert parse_cyclotomic(str(a)) == a
    assert set(a.coefficients) <= set(zumbroich_basis(a.conductor))


@settings(max_examples=100, deadline=None)
@given(cyclotomics(), st.sampled_from([1, 5, 7, 11, 13, 17, 19, 23]))
def test_galois_is_a_ring_map(a, k):
    if math.gcd(k, a.conductor) != 1:
        return
    b = a * a + 3
    assert b.galois(k) == a.galois(k) * a.galois(k) + 3


def test_root_order_of_every_root_up_to_64():
    for n in range(1, 65):
        for k in range(n):
            assert E(n, k).root_order() == n // math.gcd(n, k), (n, k)


def test_root_order_of_non_roots():
    assert Cyclotomic(2).root_order() is NOT_A_ROOT
    assert Cyclotomic(0).root_order() is NOT_A_ROOT
    assert (E(4) + 1).root_order() is NOT_A_ROOT
    assert (-E(3)).root_order() == 6


def test_minimal_conductor():
    assert E(6) == -E(3) ** 2
    assert E(6).conductor == 3
    assert (E(8) + E(8) ** 7) ** 2 == 2
    assert (E(8) + E(8) ** 7).conductor == 8
    assert ((E(3) - E(3) ** 2) ** 2) == -3
    assert (E(4) ** 2).conductor == 1
    assert (E(5) + E(5) ** 2 + E(5) ** 3 + E(5) ** 4) == -1


def test_zumbroich_basis_examples():
    assert zumbroich_basis(1) == (0,)
    assert zumbroich_basis(4) == (0, 1)
    assert zumbroich_basis(9) == (2, 3, 4, 5, 6, 7)
    assert zumbroich_basis(15) == (1, 2, 4, 7, 8, 11, 13, 14)
    for n in range(1, 61):
        # the basis has phi(n) elements
        assert len(zumbroich_basis(n)) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_rendering():
    assert str(2 * E(4)) == "2*E(4)"
    assert str(-2 * E(4)) == "-2*E(4)"
    assert str(E(9)) == "-E(9)^4-E(9)^7"
    assert str(Cyclotomic(Fraction(-3, 2))) == "-3/2"
    assert parse_cyclotomic("1/2*E(8)^3 - 2") == Cyclotomic(Fraction(1, 2)) * E(8) ** 3 - 2


def test_to_complex():
    z = complex(E(12) ** 5)
    assert close(z, cmath.exp(2j * math.pi * 5 / 12))


def test_parse_rejects_garbage():
    for bad in ["E(0)", "E(4)^", "2**E(3)", "E(", "x"]:
        with pytest.raises(Exception):
            parse_cyclotomic(bad)
