from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactgi import ExactScalar

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
scalars = st.builds(ExactScalar, rationals, rationals)


def test_canonical_form_and_equality():
    assert ExactScalar(F(2, 4)) == ExactScalar(F(1, 2))
    assert ExactScalar(F(-3, -6)) == ExactScalar(F(1, 2))
    a = ExactScalar(F(1, 2), 3)
    assert a.re.denominator == 2 and a.re.numerator == 1
    assert hash(a) == hash(ExactScalar(F(2, 4), F(6, 2)))


def test_basic_arithmetic():
    a = ExactScalar(1, 2)
    b = ExactScalar(3, -1)
    assert a + b == ExactScalar(4, 1)
    assert a - b == ExactScalar(-2, 3)
    assert a * b == ExactScalar(5, 5)
    assert ExactScalar(5, 5) / b == a
    assert -a == ExactScalar(-1, -2)
    assert a * 2 == ExactScalar(2, 4)
    assert 2 * a == a + a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ExactScalar(1) / ExactScalar(0)


def test_conjugate_and_abs_squared():
    a = ExactScalar(F(3, 4), F(-2, 5))
    assert a.conjugate() == ExactScalar(F(3, 4), F(2, 5))
    assert a.abs_squared() == F(3, 4) ** 2 + F(2, 5) ** 2
    assert (a * a.conjugate()).re == a.abs_squared()


def test_predicates():
    assert ExactScalar(0, 0).is_zero()
    assert not ExactScalar(0, 1).is_zero()
    assert ExactScalar(2).is_real()
    assert not ExactScalar(2, 1).is_real()
    assert bool(ExactScalar(0, 1))
    assert not bool(ExactScalar(0))


@given(scalars, scalars, scalars)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(scalars, scalars)
def test_division_inverts_multiplication(a, b):
    if not b.is_zero():
        assert (a * b) / b == a


@given(scalars)
def test_conjugation_is_involutive(a):
    assert a.conjugate().conjugate() == a


def test_string_forms():
    assert str(ExactScalar(0)) == "0"
    assert str(ExactScalar(F(-5, 2))) == "-5/2"
    assert str(ExactScalar(F(1, 2), 3)) == "1/2+3i"
    assert str(ExactScalar(0, -1)) == "-i"
    assert str(ExactScalar(2, -1)) == "2-i"
    assert str(ExactScalar(0, F(3, 4))) == "3/4i"
