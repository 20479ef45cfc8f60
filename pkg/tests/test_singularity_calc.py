import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ci_slope.errors import InconsistentData
from ci_slope.singularity_calc import (
    SingularityInput,
    check_theorem,
    chi_top,
    durfee_bound,
    equivalent_coefficient,
    margin_identity,
    milnor_number,
    signature_decomposition,
)
from ci_slope.verify import random_singularity


@pytest.mark.parametrize("exc, mu0, expected", [(1, 0, 2), (8, 0, 9), (1, 2, 0)])
def test_chi_top(exc, mu0, expected):
    assert chi_top(exc, mu0) == expected


@pytest.mark.parametrize("pg, K2, ct, expected", [(0, 0, 2, 1), (0, 0, 9, 8), (1, -1, 2, 12)])
def test_milnor_number(pg, K2, ct, expected):
    assert milnor_number(pg, K2, ct) == expected


def test_milnor_number_negative():
    with pytest.raises(InconsistentData):
        milnor_number(0, -5, 2)


def test_signature_decomposition_examples():
    a1 = signature_decomposition(SingularityInput(3, 0, 0, 1, 0))
    assert (a1.mu, a1.mu_plus, a1.mu_minus, a1.sigma) == (1, 0, 1, -1)
    e8 = signature_decomposition(SingularityInput(3, 0, 0, 8, 0))
    assert (e8.mu, e8.sigma) == (8, -8)
    r = signature_decomposition(SingularityInput(3, 1, -1, 1, 0))
    assert (r.mu, r.mu_plus, r.mu_minus, r.sigma) == (12, 2, 10, -8)


def test_negative_mu_minus_rejected():
    # mu_- = 10 pg + K2 + exc - mu0
    with pytest.raises(InconsistentData):
        check_theorem(SingularityInput(3, 1, -11, 1, 1))


def test_input_validation():
    with pytest.raises(InconsistentData):
        SingularityInput(2, 0, 0, 1, 0)
    with pytest.raises(InconsistentData):
        SingularityInput(3, 1, 0, 1, 3)


@pytest.mark.parametrize("args, expected", [((3, 0, 1), -1), ((3, 1, 1), -3), ((4, 1, 2), Fraction(-22, 7))])
def test_durfee_bound(args, expected):
    assert durfee_bound(*args) == expected


def test_check_theorem_examples():
    for exc in (1, 8):
        rep = check_theorem(SingularityInput(3, 0, 0, exc, 0))
        assert rep.satisfied and rep.equality and rep.sigma == rep.bound == -exc
        assert rep.caption
    rep = check_theorem(SingularityInput(3, 1, -1, 1, 0))
    assert (rep.sigma, rep.bound, rep.satisfied, rep.equality, rep.margin) == (-8, -3, True, False, 5)


def test_margin_identity_examples():
    assert margin_identity(SingularityInput(3, 0, 0, 1, 0)) == 0
    assert margin_identity(SingularityInput(3, 1, -1, 1, 0)) == 5
    assert margin_identity(SingularityInput(4, 1, 0, 1, 0)) == Fraction(48, 7)


def test_report_invariants_random():
    rng = random.Random(11)
    for _ in range(500):
        inp = random_singularity(rng)
        rep = check_theorem(inp)
        assert rep.mu == rep.mu_plus + rep.mu_minus + rep.mu_zero
        assert rep.sigma == rep.mu_plus - rep.mu_minus
        assert (rep.margin >= 0) == rep.satisfied
        assert rep.margin == margin_identity(inp)
        assert rep.sigma == 4 * inp.pg - inp.mu0 - rep.mu
        assert (rep.satisfied, rep.equality) == (rep.equiv_satisfied, rep.equiv_equality)


@given(st.integers(3, 12), st.integers(1, 12))
def test_rational_double_point_data(emb, exc):
    rep = check_theorem(SingularityInput(emb, 0, 0, exc, 0))
    assert rep.sigma == -exc and rep.equality


def test_hypersurface_coefficient():
    assert equivalent_coefficient(3) == 6


def test_proof_convention_denominator():
    rep = check_theorem(SingularityInput(5, 2, -3, 4, 1))
    assert rep.proof_index == 4
    assert rep.proof_denominator == 3 * 5 - 5
