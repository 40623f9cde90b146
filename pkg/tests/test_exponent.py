from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monideal.exponent import (
    INF,
    AmbientConfig,
    Mode,
    format_exponent,
    geq_eps,
    normalize_strictness,
    parse_extended,
    parse_rational,
)

DENSE = AmbientConfig(2)
INTEGER = AmbientConfig(2, Mode.INTEGER)
rationals = st.fractions(min_value=0, max_value=10, max_denominator=12)


def test_geq_eps_examples():
    assert geq_eps(Fraction(3, 2), Fraction(3, 2), False)
    assert not geq_eps(Fraction(3, 2), Fraction(3, 2), True)
    assert not geq_eps(Fraction(2), INF, False)
    assert geq_eps(INF, INF, True)
    assert geq_eps(INF, Fraction(5), True)


def test_normalize_strictness_examples():
    assert normalize_strictness(1, True, INTEGER) == (2, False)
    assert normalize_strictness(1, True, DENSE) == (1, True)
    assert normalize_strictness(Fraction(3, 2), False, INTEGER) == (2, False)
    assert normalize_strictness(3, False, INTEGER) == (3, False)
    assert normalize_strictness(Fraction(5, 2), True, INTEGER) == (3, False)


@given(rationals, rationals)
def test_strict_implies_closed(r, a):
    if geq_eps(r, a, True):
        assert geq_eps(r, a, False)


@given(rationals, rationals, rationals, st.booleans())
def test_monotone_in_r(r, dr, a, e):
    if geq_eps(r, a, e):
        assert geq_eps(r + dr, a, e)


@given(rationals, st.booleans())
def test_integer_normalization_preserves_solutions(a, e):
    b, f = normalize_strictness(a, e, INTEGER)
    assert not f and b.denominator == 1
    for n in range(0, 15):
        assert geq_eps(Fraction(n), a, e) == geq_eps(Fraction(n), b, f)


def test_rational_text_round_trip():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert format_exponent(Fraction(6, 4)) == "3/2"
    assert format_exponent(Fraction(2)) == "2"
    assert format_exponent(INF) == "inf"
    assert parse_extended("inf") == INF
    with pytest.raises(ValueError):
        parse_rational("-1")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_config_validation():
    with pytest.raises(ValueError):
        AmbientConfig(0)
    assert AmbientConfig(3, "Z").mode is Mode.INTEGER
