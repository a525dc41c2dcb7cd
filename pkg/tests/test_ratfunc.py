from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from transfact.ratfunc import AlphaRational, pgcd

A = AlphaRational.alpha()
ONE = AlphaRational.const(1)


def test_reduction():
    f = (A * A - ONE) / (A - ONE)
    assert f == A + ONE
    assert f.is_polynomial()
    assert not (ONE / A).is_polynomial()


def test_evaluate_and_shift():
    f = (A * A + ONE) / (A + 2)
    assert f(1) == Fraction(2, 3)
    g = f.shift(1)
    assert g(0) == f(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / AlphaRational()


def test_json_roundtrip():
    f = (A ** 3 - Fraction(1, 2) * A) / (A + 3)
    assert AlphaRational.from_json(f.to_json()) == f
    assert all(isinstance(x, str) for x in f.to_json()["num"])


def test_gcd():
    assert pgcd((Fraction(-1), Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))) == (1, 1)


small = st.lists(st.fractions(max_denominator=5).filter(lambda x: abs(x) < 5), min_size=1, max_size=3)


@given(small, small, small)
def test_field_axioms(a, b, c):
    f, g, h = AlphaRational(a), AlphaRational(b), AlphaRational(c) + A
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * h) / h == f
    assert hash(f + g) == hash(g + f)
