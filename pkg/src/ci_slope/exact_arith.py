"""Exact scalars and the combinatorial sums behind the invariant formulas.

Every scalar in the package is a :class:`fractions.Fraction`, exposed here
under the name ``Rational``. Nothing in the computation path touches floats.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import UnsupportedArgument

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "binom_poly",
    "sigma_direct",
    "sigma_closed",
    "sigma_recursive",
]


def as_rational(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact scalars")
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(x) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def binom_poly(x: int, k: int) -> int:
    """Binomial coefficient extended to all integers ``x`` by the falling factorial.

    ``binom_poly(x, k) = x(x-1)...(x-k+1)/k!``, so e.g. ``binom_poly(-1, 3) == -1``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if x >= 0:
        return comb(x, k)
    # C(-y, k) = (-1)^k C(y + k - 1, k)
    return (-1) ** k * comb(-x + k - 1, k)


def sigma_direct(m: int, l: int) -> int:
    """Literal alternating sum ``sum_k (-1)^k C(m, k) k^l`` with ``0^0 = 1``."""
    if m < 0 or l < 0:
        raise ValueError("m and l must be nonnegative")
    # Python already evaluates 0 ** 0 == 1
    return sum((-1) ** k * comb(m, k) * k**l for k in range(m + 1))


def sigma_closed(m: int, l: int) -> int:
    """Closed forms for ``l in {m, m+1, m+2}``; zero when ``m > l``."""
    if m < 1 or l < 0:
        raise ValueError("need m >= 1 and l >= 0")
    if m > l:
        return 0
    sign = (-1) ** m
    mf = factorial(m)
    if l == m:
        return sign * mf
    if l == m + 1:
        return sign * m * (m + 1) * mf // 2
    if l == m + 2:
        return sign * m * (m + 1) * (m + 2) * (3 * m + 1) * mf // 24
    raise UnsupportedArgument(f"no closed form for sigma({m}, {l}) with l > m + 2")


@lru_cache(maxsize=None)
def sigma_recursive(m: int, l: int) -> int:
    """Evaluate via ``sigma(m, l) = m (sigma(m, l-1) - sigma(m-1, l-1))``.

    Base values: ``sigma(m, 0) = 0`` for ``m >= 1``, ``sigma(0, 0) = 1`` and
    ``sigma(0, l) = 0`` for ``l >= 1``.
    """
    if m < 0 or l < 0:
        raise ValueError("m and l must be nonnegative")
    if m == 0:
        return 1 if l == 0 else 0
    if l == 0:
        return 0
    return m * (sigma_recursive(m, l - 1) - sigma_recursive(m - 1, l - 1))
