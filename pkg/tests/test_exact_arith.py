from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ci_slope.errors import UnsupportedArgument
from ci_slope.exact_arith import (
    as_rational,
    binom_poly,
    format_rational,
    parse_rational,
    sigma_closed,
    sigma_direct,
    sigma_recursive,
)


@pytest.mark.parametrize("x, k, expected", [(5, 2, 10), (-1, 3, -1), (0, 4, 0), (-1, 0, 1), (3, 5, 0)])
def test_binom_poly_examples(x, k, expected):
    assert binom_poly(x, k) == expected


def test_binom_poly_falling_factorial():
    for x in range(-12, 13):
        for k in range(0, 8):
            num = 1
            for j in range(k):
                num *= x - j
            assert Fraction(num, factorial(k)) == binom_poly(x, k)


@given(st.integers(-200, 200), st.integers(1, 15))
def test_binom_poly_pascal(x, k):
    assert binom_poly(x, k) == binom_poly(x - 1, k) + binom_poly(x - 1, k - 1)


@given(st.integers(0, 200), st.integers(0, 15))
def test_binom_poly_agrees_with_comb(x, k):
    assert binom_poly(x, k) == comb(x, k)


def test_binom_poly_rejects_negative_k():
    with pytest.raises(ValueError):
        binom_poly(3, -1)


@pytest.mark.parametrize("m, l, expected", [(3, 2, 0), (2, 3, 6), (3, 3, -6), (3, 5, -150)])
def test_sigma_direct_examples(m, l, expected):
    assert sigma_direct(m, l) == expected


@pytest.mark.parametrize("m, l, expected", [(1, 1, -1), (2, 3, 6), (4, 2, 0)])
def test_sigma_closed_examples(m, l, expected):
    assert sigma_closed(m, l) == expected


@pytest.mark.parametrize("m, l, expected", [(2, 2, 2), (1, 0, 0), (3, 5, -150)])
def test_sigma_recursive_examples(m, l, expected):
    assert sigma_recursive(m, l) == expected


def test_sigma_closed_unsupported():
    with pytest.raises(UnsupportedArgument):
        sigma_closed(2, 5)


def test_sigma_base_values():
    assert sigma_recursive(0, 0) == sigma_direct(0, 0) == 1
    assert all(sigma_recursive(0, l) == 0 for l in range(1, 6))


def test_sigma_three_routes_agree():
    for m in range(1, 9):
        for l in range(0, 11):
            assert sigma_direct(m, l) == sigma_recursive(m, l)
            if l < m:
                assert sigma_direct(m, l) == 0
            if l <= m + 2:
                assert sigma_direct(m, l) == sigma_closed(m, l)


big = st.integers(-(10**40), 10**40)
nonzero = big.filter(lambda x: x != 0)


@given(big, nonzero, big, nonzero)
def test_rational_round_trip(a, b, c, d):
    x, y = Fraction(a, b), Fraction(c, d)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert x.denominator > 0


def test_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / 0


def test_format_rational():
    assert format_rational(Fraction(24, 5)) == "24/5"
    assert format_rational(Fraction(-6, 2)) == "-3"
    assert format_rational(7) == "7"
    assert parse_rational("-22/7") == Fraction(-22, 7)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
