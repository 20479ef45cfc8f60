import random

import pytest

from ci_slope.chow_ring import ChowClass, RingSpec, exp_class, grr_pushforward_degree, koszul_ch
from ci_slope.errors import OracleOutOfRange
from ci_slope.exact_arith import binom_poly
from ci_slope.fibration_invariants import A_coefficients, FibrationConfig, eprime, uvr
from ci_slope.oracles import (
    a_coeffs_bruteforce,
    deg_sym_splitting,
    koszul_ch_bruteforce,
    pushforward_degree_rr,
)


def test_a_coeffs_hand_expansion():
    # A0 = -C(-1,2) + C(3,2), A1 = C(4,3), A2 = C(3,2)
    assert a_coeffs_bruteforce(2, 4) == (2, 4, 3)
    assert a_coeffs_bruteforce(3, 2) == A_coefficients(3, 2)
    for n in range(2, 6):
        assert a_coeffs_bruteforce(n, 1)[1:] == (0, 0)


@pytest.mark.parametrize("rank", [1, 2, 3, 5])
@pytest.mark.parametrize("degE", [-3, 0, 4])
def test_deg_sym(rank, degE):
    assert deg_sym_splitting(0, rank, degE) == 0
    assert deg_sym_splitting(1, rank, degE) == degE
    for m in range(0, 7):
        assert deg_sym_splitting(m, rank, degE) == binom_poly(m + rank - 1, rank) * degE


def test_deg_sym_rank_two():
    for m in range(6):
        assert deg_sym_splitting(m, 2, 7) * 2 == m * (m + 1) * 7


def test_rr_guard():
    cfg = FibrationConfig(2, 4, 0, 1, (0,))
    with pytest.raises(OracleOutOfRange):
        pushforward_degree_rr(cfg, 3)


def test_rr_zero_bundle():
    assert pushforward_degree_rr(FibrationConfig(3, 3, 2, 0, (0, 0)), 6) == 0


@pytest.mark.parametrize("n", [2, 3])
def test_rr_matches_grr_and_uv(n):
    for d in (2, 3, 4):
        ep = eprime(n, d)
        guard = (n - 1) * d
        twists = [e for e in range(guard, guard + 6)]
        if ep > 0:
            twists += [m * ep for m in (1, 2, 3) if m * ep >= guard]
        for e in twists:
            for degE, a in ((1, (0,) * (n - 1)), (-2, (1,) * (n - 1)), (3, (2,) + (-1,) * (n - 2))):
                for b in (0, 2):
                    cfg = FibrationConfig(n, d, b, degE, a)
                    rr = pushforward_degree_rr(cfg, e)
                    assert rr == grr_pushforward_degree(n, d, e, degE, list(a)), (n, d, e, degE, a, b)
                    if ep > 0 and e % ep == 0:
                        u, v, _ = uvr(n, d, e // ep)
                        assert rr == u * degE + v * sum(a)


def test_koszul_bruteforce_examples():
    spec = RingSpec(3, 2)
    assert koszul_ch_bruteforce([ChowClass.zero(spec).degree_part(1)]).is_zero()
    rho = ChowClass.divisor(spec, 2, -1)
    one_minus = 1 - exp_class(rho, -1)
    assert koszul_ch_bruteforce([rho, rho]) == one_minus * one_minus


def test_koszul_bruteforce_matches_engine():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 6)
        spec = RingSpec(n, rng.randint(-3, 3))
        rhos = [ChowClass.divisor(spec, rng.randint(-3, 5), rng.randint(-4, 4)) for _ in range(rng.randint(1, n + 1))]
        assert koszul_ch_bruteforce(rhos) == koszul_ch(rhos)
