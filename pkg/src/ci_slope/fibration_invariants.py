"""Invariants of complete-intersection surfaces in ``P_B(E)`` fibred over ``B``.

A configuration ``(n, d, b, degE, a)`` describes ``X = H_1 ∩ ... ∩ H_(n-1)``
with ``H_i`` in ``|O_W(d) ⊗ pi^* a_i|``, ``B`` of genus ``b`` and ``E`` of rank
``n + 1``. The closed forms here are paired with independent recomputations
(intersection products on ``W``, inclusion-exclusion of line bundle Euler
characteristics) so each can be checked against the other.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .chow_ring import ChowClass, RingSpec, evaluate_top
from .errors import DegenerateFiberGenus, SlopeUndefined
from .exact_arith import binom_poly

__all__ = [
    "FibrationConfig",
    "InvariantReport",
    "eprime",
    "lambda_nd",
    "genus",
    "chi_line",
    "A_coefficients",
    "invariants_closed",
    "k2_chow",
    "chi_incl_excl",
    "uvr",
]


def eprime(n: int, d: int) -> int:
    """Twist ``e'`` with ``e' L|_F = K_F``: ``(n-1)d - (n+1)``."""
    return (n - 1) * d - (n + 1)


@dataclass(frozen=True)
class FibrationConfig:
    n: int
    d: int
    b: int
    degE: int
    a: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.b < 0:
            raise ValueError(f"genus b must be >= 0, got {self.b}")
        if len(self.a) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} twist degrees a_i, got {len(self.a)}")

    @property
    def eprime(self) -> int:
        return eprime(self.n, self.d)

    @property
    def sum_a(self) -> int:
        return sum(self.a)


@dataclass(frozen=True)
class InvariantReport:
    K2: Fraction
    chi: Fraction
    genus: int
    # None where the slope is undefined (e' <= 0 or (n, d) = (2, 2))
    lambda_: Optional[Fraction]
    slope_equality: Optional[bool]
    diagnostics: tuple = ()


def lambda_nd(n: int, d: int) -> Fraction:
    """Slope bound ``24((n-1)d - (n+1)) / ((3n-2)d - (3n+2))``."""
    den = (3 * n - 2) * d - (3 * n + 2)
    if den == 0:
        raise SlopeUndefined("slope undefined: denominator zero")
    return Fraction(24 * eprime(n, d), den)


def genus(n: int, d: int) -> int:
    """Genus of a complete intersection of ``n - 1`` degree-``d`` hypersurfaces in ``P^n``."""
    twice = d ** (n - 1) * eprime(n, d)
    if twice % 2:
        raise ArithmeticError(f"d^(n-1) e' is odd for n={n}, d={d}")
    return twice // 2 + 1


def chi_line(n: int, b: int, degE: int, d: int, a: int) -> Fraction:
    """``chi(O_W(-d) ⊗ pi^* O_B(-a))`` for any integers ``d`` and ``a``."""
    val = binom_poly(d - 1, n) * (b - 1) + binom_poly(d, n + 1) * degE + binom_poly(d - 1, n) * a
    return Fraction((-1) ** (n + 1) * val)


def A_coefficients(n: int, d: int) -> tuple:
    """Closed forms of the coefficients of ``b - 1``, ``deg E`` and ``sum a_i`` in ``chi(O_X)``."""
    q = (3 * n - 2) * d - (3 * n + 2)
    A0 = Fraction(d ** (n - 1) * eprime(n, d), 2)
    A1 = Fraction(q * d ** (n - 1) * (d - 1) * (n - 1), 24)
    # d^(n-2) with n >= 2 is an integer power
    A2 = Fraction(q * d ** (n - 2) * (d - 1) * (n + 1), 24)
    return A0, A1, A2


def _slope_fields(n: int, d: int):
    if eprime(n, d) <= 0:
        return None
    try:
        return lambda_nd(n, d)
    except SlopeUndefined:
        return None


def invariants_closed(cfg: FibrationConfig) -> InvariantReport:
    """``K^2`` and ``chi`` of the relative fibration from their closed forms."""
    n, d = cfg.n, cfg.d
    if d < 2:
        raise ValueError("closed-form invariants need d >= 2")
    common = (d - 1) * d ** (n - 2) * ((n - 1) * d * cfg.degE + (n + 1) * cfg.sum_a)
    K2 = Fraction(eprime(n, d) * common)
    chi = Fraction(((3 * n - 2) * d - (3 * n + 2)) * common, 24)
    lam = _slope_fields(n, d)
    diagnostics = []
    if chi < 0:
        diagnostics.append("chi < 0: not realizable by a relatively minimal fibration")
    if lam is None:
        diagnostics.append("slope undefined for this (n, d)")
    return InvariantReport(
        K2=K2,
        chi=chi,
        genus=genus(n, d),
        lambda_=lam,
        slope_equality=None if lam is None else K2 == lam * chi,
        diagnostics=tuple(diagnostics),
    )


def k2_chow(cfg: FibrationConfig) -> Fraction:
    """``K^2`` of the relative fibration as an intersection product on ``W``."""
    n, d, b = cfg.n, cfg.d, cfg.b
    ep = cfg.eprime
    spec = RingSpec(n, cfg.degE)
    canonical = ChowClass.divisor(spec, ep, cfg.sum_a + 2 * b - 2 + cfg.degE)
    prod = canonical * canonical
    for ai in cfg.a:
        prod = prod * ChowClass.divisor(spec, d, ai)
    KX2 = evaluate_top(prod)
    return KX2 - 4 * ep * d ** (n - 1) * (b - 1)


def chi_incl_excl(cfg: FibrationConfig, twist: int = 0) -> Fraction:
    """``chi(O_X(twist))`` by inclusion-exclusion over the Koszul terms."""
    n = cfg.n
    total = Fraction(0)
    for k in range(n):
        sign = (-1) ** k
        for subset in combinations(cfg.a, k):
            total += sign * chi_line(n, cfg.b, cfg.degE, k * cfg.d - twist, sum(subset))
    return total


def uvr(n: int, d: int, m: int) -> tuple:
    """Coefficients ``(u, v, r)`` of ``deg pi_* O_X(e)`` at ``e = m e'``."""
    ep = eprime(n, d)
    if ep <= 0:
        raise DegenerateFiberGenus(f"e' = {ep} <= 0 for n={n}, d={d}")
    if m < 1:
        raise ValueError("m must be >= 1")
    return uvr_at(n, d, m * ep)


def uvr_at(n: int, d: int, e: int) -> tuple:
    """``(u, v, r)`` as polynomials in an arbitrary twist ``e``."""
    r = Fraction((d - 1) * ((3 * n - 2) * d - (3 * n + 2)), 24)
    u = Fraction(d ** (n - 1), 2) * (e * e - ((n - 1) * d - n) * e + 2 * (n - 1) * r)
    v = Fraction(d ** (n - 2), 2) * (e * e - (n * d - (n + 1)) * e + 2 * (n + 1) * r)
    return u, v, r


