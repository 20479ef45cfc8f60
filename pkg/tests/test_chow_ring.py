import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ci_slope.chow_ring import (
    ChowClass,
    RingSpec,
    ch_OC_closed,
    ch_OX_closed,
    evaluate_top,
    exp_class,
    grr_pushforward_degree,
    koszul_ch,
    mul,
    todd_relative,
    todd_series,
)
from ci_slope.fibration_invariants import uvr


def D(spec, t, g):
    return ChowClass.divisor(spec, t, g)


def test_product_of_divisors():
    spec = RingSpec(3, 2)
    d, a, a2 = 4, 3, -5
    prod = D(spec, d, a) * D(spec, d, a2)
    assert prod.coeffs[2] == (d * d, d * (a + a2))
    assert prod.is_homogeneous(2)


def test_top_degree_relation():
    d, degE = 3, 7
    spec = RingSpec(2, degE)
    x = D(spec, d, 0) ** 3
    assert x.coeffs[3] == (0, d**3 * degE)
    assert evaluate_top(x) == d**3 * degE


def test_identity():
    spec = RingSpec(4, -1)
    x = D(spec, 2, 5) * D(spec, 1, 1) + 3
    assert ChowClass.one(spec) * x == x


def test_evaluate_top_examples():
    assert evaluate_top(D(RingSpec(2, 1), 4, 0) ** 3) == 64
    assert evaluate_top(ChowClass.monomial(RingSpec(2, 0), 2, 1)) == 1
    spec = RingSpec(3, 5)
    gamma = D(spec, 0, 1)
    assert (gamma * gamma * (D(spec, 2, 3) + 1)).is_zero()


def test_mismatched_specs():
    with pytest.raises(ValueError):
        mul(D(RingSpec(2, 1), 1, 0), D(RingSpec(2, 2), 1, 0))


def test_exp_class():
    spec = RingSpec(2, 3)
    assert exp_class(ChowClass.zero(spec).degree_part(1)) == ChowClass.one(spec)
    rho = D(spec, 4, -1)
    expected = 1 - rho + rho * rho / 2 - rho * rho * rho / 6
    assert exp_class(rho, -1) == expected
    assert exp_class(rho) * exp_class(rho, -1) == ChowClass.one(spec)


def test_exp_class_rejects_inhomogeneous():
    spec = RingSpec(2, 3)
    with pytest.raises(ValueError):
        exp_class(D(spec, 1, 1) + 1)


def test_koszul_single_class():
    spec = RingSpec(3, 2)
    rho = D(spec, 3, 1)
    assert koszul_ch([rho]) == 1 - exp_class(rho, -1)


def test_ch_OX_closed_n2():
    spec = RingSpec(2, 3)
    rho = D(spec, 5, -2)
    assert ch_OX_closed([rho]) == (1 - rho / 2 + rho * rho / 6) * rho


def test_closed_forms_vanish_on_zero_class():
    spec = RingSpec(4, 1)
    zero = ChowClass.zero(spec)
    assert ch_OX_closed([zero] * 3).is_zero()
    assert ch_OC_closed([D(spec, 2, 1), D(spec, 2, 0), zero, D(spec, 1, 1)]).is_zero()


def test_closed_forms_wrong_length():
    spec = RingSpec(3, 1)
    with pytest.raises(ValueError):
        ch_OX_closed([D(spec, 2, 0)])
    with pytest.raises(ValueError):
        ch_OC_closed([D(spec, 2, 0)] * 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_koszul_equals_ch_OX_closed(n):
    # both sides are symmetric in the rho_i, so multisets of a_i cover the full grid
    for d in range(2, 6):
        spec = RingSpec(n, 1)
        for a in combinations_with_replacement(range(-2, 3), n - 1):
            rhos = [D(spec, d, ai) for ai in a]
            assert koszul_ch(rhos) == ch_OX_closed(rhos), (n, d, a)


@pytest.mark.parametrize("n", range(2, 6))
def test_koszul_equals_ch_OC_closed(n):
    for d in range(2, 6):
        spec = RingSpec(n, 2)
        for a in combinations_with_replacement((-2, 0, 2), n - 1):
            for e, aL in ((1, -1), (3, 2)):
                rhos = [D(spec, d, ai) for ai in a] + [D(spec, e, aL)]
                closed = ch_OC_closed(rhos)
                assert koszul_ch(rhos) == closed
                s = sum(rhos, ChowClass.zero(spec))
                prod = ChowClass.one(spec)
                for r in rhos:
                    prod = prod * r
                assert closed.degree_part(n + 1) == (s * prod * Fraction(-1, 2)).degree_part(n + 1)


def test_todd_series_known_terms():
    # x/(1-e^-x) = 1 + x/2 + x^2/12 - x^4/720 + x^6/30240 - ...
    c = todd_series(6)
    assert c == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720), 0, Fraction(1, 30240))


@pytest.mark.parametrize("n, degE", [(2, 0), (2, 3), (3, -2), (5, 7)])
def test_todd_low_degree_terms(n, degE):
    spec = RingSpec(n, degE)
    td = todd_relative(spec)
    nu1 = D(spec, n + 1, -degE)
    nu2 = ChowClass.monomial(spec, 2) * Fraction(n * (n + 1), 2) - ChowClass.monomial(spec, 1, 1) * (n * degE)
    assert td.degree_part(0) == ChowClass.one(spec)
    assert td.degree_part(1) == nu1 / 2
    assert td.degree_part(2) == ((nu1 * nu1 + nu2) / 12).degree_part(2)


def test_grr_zero_bundle():
    assert grr_pushforward_degree(3, 3, 4, 0, [0, 0]) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_grr_coefficients_match_uv(n):
    for d in range(2, 6):
        ep = (n - 1) * d - (n + 1)
        if ep <= 0:
            continue
        for m in (1, 2, 3):
            u, v, _ = uvr(n, d, m)
            e = m * ep
            assert grr_pushforward_degree(n, d, e, 1, [0] * (n - 1)) == u
            assert grr_pushforward_degree(n, d, e, 0, [1] + [0] * (n - 2)) == v


def test_grr_is_linear():
    n, d, e = 3, 3, 4
    f = lambda degE, a: grr_pushforward_degree(n, d, e, degE, a)
    base = f(0, [0, 0])
    for x in (-3, 1, 5):
        assert f(x, [0, 0]) - base == x * (f(1, [0, 0]) - base)
        assert f(0, [x, 0]) - base == x * (f(0, [1, 0]) - base)
        assert f(0, [0, x]) - base == x * (f(0, [0, 1]) - base)
    assert f(2, [1, -4]) == 2 * f(1, [0, 0]) + f(0, [1, 0]) - 4 * f(0, [0, 1])


coeff = st.integers(-6, 6)


def classes(spec):
    pair = st.tuples(coeff, coeff)
    return st.lists(pair, min_size=spec.n + 2, max_size=spec.n + 2).map(
        lambda cs: ChowClass(spec, [(cs[0][0], 0)] + cs[1:])
    )


SPEC = RingSpec(3, 2)


@settings(max_examples=60)
@given(classes(SPEC), classes(SPEC), classes(SPEC))
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


def test_top_evaluation_of_divisor_products():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 6)
        degE = rng.randint(-4, 4)
        spec = RingSpec(n, degE)
        xs = [rng.randint(-5, 5) for _ in range(n + 1)]
        ys = [rng.randint(-5, 5) for _ in range(n + 1)]
        prod = ChowClass.one(spec)
        for x, y in zip(xs, ys):
            prod = prod * D(spec, x, y)
        # at most one fiber factor survives
        all_t = 1
        for x in xs:
            all_t *= x
        one_gamma = 0
        for i in range(n + 1):
            term = ys[i]
            for j, x in enumerate(xs):
                if j != i:
                    term *= x
            one_gamma += term
        assert evaluate_top(prod) == all_t * degE + one_gamma
