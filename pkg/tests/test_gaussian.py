from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from g31.gaussian import (
    GaussRat,
    I,
    ONE,
    ZERO,
    parse,
    sqrt_gaussian,
    sqrt_rational,
)

small = st.integers(min_value=-8, max_value=8)
nonzero_den = st.integers(min_value=1, max_value=8)


@st.composite
def gauss_rats(draw):
    return GaussRat(
        Fraction(draw(small), draw(nonzero_den)),
        Fraction(draw(small), draw(nonzero_den)),
    )


@given(gauss_rats(), gauss_rats(), gauss_rats())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a


@given(gauss_rats())
def test_additive_and_multiplicative_inverse(a):
    assert a + (-a) == ZERO
    if a:
        assert a * a.inv() == ONE
    else:
        with pytest.raises(ZeroDivisionError):
            a.inv()


@given(gauss_rats())
def test_conjugation_and_norm(a):
    n = a * a.conj()
    assert n.is_rational()
    assert n.norm() == a.norm() * a.norm()
    assert a.norm() >= 0


def test_i_squares_to_minus_one():
    assert I * I == -ONE


@given(gauss_rats())
def test_serialize_parse_round_trip(a):
    assert parse(a.serialize()) == a


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse("not a number")


@given(gauss_rats())
def test_sqrt_of_square_is_plus_minus(a):
    z = a * a
    r = sqrt_gaussian(z)
    assert r is not None
    assert r == a or r == -a
    assert r * r == z


def test_sqrt_rational_exact_cases():
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_rational(Fraction(2)) is None
    assert sqrt_rational(Fraction(-4)) is None
    assert sqrt_rational(Fraction(0)) == Fraction(0)


def test_known_square_roots():
    # 2i = (1+i)^2, but i itself has no square root in Q(i)
    two_i = GaussRat(0, 2)
    r = sqrt_gaussian(two_i)
    assert r is not None and r * r == two_i
    assert sqrt_gaussian(I) is None


def test_canonical_reduction_and_hash():
    a = GaussRat(Fraction(2, 6), Fraction(4, 6))
    b = GaussRat(Fraction(1, 3), Fraction(2, 3))
    assert a == b and hash(a) == hash(b)
    assert (a.rn, a.in_, a.d) == (1, 2, 3)


def test_division():
    a = GaussRat(3, -2)
    b = GaussRat(Fraction(1, 2), 5)
    assert (a / b) * b == a
