"""Brute-force recomputations used to check the closed forms.

Nothing here calls into :mod:`ci_slope.chow_ring` arithmetic. The Koszul
oracle carries its own dictionary-of-monomials representation and only
converts to a ``ChowClass`` at the very end so results can be compared.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Sequence

from .chow_ring import ChowClass
from .errors import OracleOutOfRange
from .exact_arith import binom_poly
from .fibration_invariants import FibrationConfig, chi_incl_excl

__all__ = [
    "a_coeffs_bruteforce",
    "deg_sym_splitting",
    "pushforward_degree_rr",
    "hilbert_rank",
    "koszul_ch_bruteforce",
]


def a_coeffs_bruteforce(n: int, d: int) -> tuple:
    """Literal alternating binomial sums ``(A0, A1, A2)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    A0 = A1 = A2 = 0
    for k in range(n):
        sign = (-1) ** (n + k + 1)
        A0 += sign * comb(n - 1, k) * binom_poly(k * d - 1, n)
        A1 += sign * comb(n - 1, k) * binom_poly(k * d, n + 1)
        if k >= 1:
            A2 += sign * comb(n - 2, k - 1) * binom_poly(k * d - 1, n)
    return Fraction(A0), Fraction(A1), Fraction(A2)


def deg_sym_splitting(m: int, rank: int, degE: int) -> int:
    """Degree of ``Sym^m`` of a sum of ``rank`` line bundles of total degree ``degE``.

    Enumerates every exponent multiset. The line bundle degrees are spread
    unevenly (``0, 1, ..., rank-2`` and the remainder) so the count is not a
    symmetric shortcut.
    """
    if m < 0 or rank < 1:
        raise ValueError("need m >= 0 and rank >= 1")
    degrees = list(range(rank - 1))
    degrees.append(degE - sum(degrees))
    total = 0
    for mono in combinations_with_replacement(range(rank), m):
        total += sum(degrees[i] for i in mono)
    return total


def hilbert_rank(n: int, d: int, e: int) -> int:
    """``chi(O_F(e))`` for a complete intersection ``F`` of ``n - 1`` degree-``d`` hypersurfaces."""
    return sum((-1) ** k * comb(n - 1, k) * binom_poly(e - k * d + n, n) for k in range(n))


def pushforward_degree_rr(cfg: FibrationConfig, e: int) -> Fraction:
    """``deg pi_* O_X(e)`` from Riemann-Roch on ``B``: ``chi(O_X(e)) - rank (1 - b)``."""
    guard = (cfg.n - 1) * cfg.d
    if e < guard:
        raise OracleOutOfRange(f"twist {e} below the vanishing guard {guard}")
    rank = hilbert_rank(cfg.n, cfg.d, e)
    return chi_incl_excl(cfg, e) - rank * (1 - cfg.b)


# monomials T^i G^j stored as {(i, j): coeff}, j in {0, 1}


def _poly_mul(p: dict, q: dict, top: int) -> dict:
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            j = j1 + j2
            if j > 1 or i1 + i2 + j > top:
                continue
            key = (i1 + i2, j)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _poly_add(p: dict, q: dict, scale=1) -> dict:
    out = dict(p)
    for key, c in q.items():
        out[key] = out.get(key, 0) + scale * c
    return out


def koszul_ch_bruteforce(rhos: Sequence[ChowClass]) -> ChowClass:
    """Expand ``sum_k (-1)^k sum_S sum_j (-1)^j (rho_S)^j / j!`` term by term."""
    if not rhos:
        raise ValueError("need at least one class")
    spec = rhos[0].spec
    top = spec.n + 1
    linear = []
    for r in rhos:
        t, g = r.coeffs[1]
        linear.append({(1, 0): t, (0, 1): g})
    total = {}
    for k in range(len(linear) + 1):
        for subset in combinations(linear, k):
            s = {}
            for lin in subset:
                s = _poly_add(s, lin)
            power = {(0, 0): Fraction(1)}
            fact = 1
            for j in range(top + 1):
                if j > 0:
                    power = _poly_mul(power, s, top)
                    fact *= j
                sign = (-1) ** (k + j)
                total = _poly_add(total, power, Fraction(sign, fact))
    coeffs = [[0, 0] for _ in range(top + 1)]
    for (i, j), c in total.items():
        deg = i + j
        coeffs[deg][j] += c
    return ChowClass(spec, coeffs)
