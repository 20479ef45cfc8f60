"""Numerical Chow ring of a projective bundle ``W = P_B(E)`` over a curve.

``E`` has rank ``n + 1``, so ``W`` has dimension ``n + 1``. Numerical classes
are spanned by ``T^k`` and ``T^(k-1) G`` where ``T`` is the tautological class
and ``G`` the fiber class, subject to

    G^2 = 0,    T^(n+1) = deg E,    T^n G = 1.

A pullback of a degree ``delta`` divisor class on ``B`` is written ``delta G``.
Classes are kept unreduced below the top degree. The top degree is stored in
the canonical form ``beta T^n G`` with ``beta = t_(n+1) deg E + g_(n+1)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .exact_arith import as_rational

__all__ = [
    "RingSpec",
    "ChowClass",
    "mul",
    "evaluate_top",
    "exp_class",
    "koszul_ch",
    "ch_OX_closed",
    "ch_OC_closed",
    "todd_series",
    "todd_relative",
    "grr_pushforward_degree",
]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class RingSpec:
    n: int
    degE: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"relative dimension n must be >= 2, got {self.n}")

    @property
    def top(self) -> int:
        return self.n + 1


class ChowClass:
    """Immutable numerical class on ``W``.

    ``coeffs[k] = (t_k, g_k)`` is the coefficient pair of ``T^k`` and
    ``T^(k-1) G``; ``g_0`` is always zero.
    """

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: RingSpec, coeffs: Iterable[tuple] = ()):
        top = spec.top
        cs = [[_ZERO, _ZERO] for _ in range(top + 1)]
        for k, (t, g) in enumerate(coeffs):
            if k > top:
                # dimension truncation
                break
            cs[k][0] += as_rational(t)
            cs[k][1] += as_rational(g)
        if cs[0][1]:
            raise ValueError("degree-0 part cannot carry a fiber class")
        t, g = cs[top]
        cs[top] = [_ZERO, t * spec.degE + g]
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple((t, g) for t, g in cs))

    def __setattr__(self, name, value):
        raise AttributeError("ChowClass is immutable")

    # constructors

    @classmethod
    def zero(cls, spec: RingSpec) -> "ChowClass":
        return cls(spec)

    @classmethod
    def one(cls, spec: RingSpec) -> "ChowClass":
        return cls(spec, [(1, 0)])

    @classmethod
    def scalar(cls, spec: RingSpec, c) -> "ChowClass":
        return cls(spec, [(c, 0)])

    @classmethod
    def divisor(cls, spec: RingSpec, t, g) -> "ChowClass":
        """The degree-1 class ``t T + g G``."""
        return cls(spec, [(0, 0), (t, g)])

    @classmethod
    def monomial(cls, spec: RingSpec, t_power: int, gamma_power: int = 0) -> "ChowClass":
        if gamma_power > 1:
            return cls(spec)
        deg = t_power + gamma_power
        cs = [(0, 0)] * (deg + 1)
        cs[deg] = (0, 1) if gamma_power else (1, 0)
        return cls(spec, cs)

    # structure

    def degree_part(self, k: int) -> "ChowClass":
        cs = [(0, 0)] * (k + 1)
        if k <= self.spec.top:
            cs[k] = self.coeffs[k]
        return ChowClass(self.spec, cs)

    def is_homogeneous(self, k: int) -> bool:
        return all(t == 0 and g == 0 for j, (t, g) in enumerate(self.coeffs) if j != k)

    def is_zero(self) -> bool:
        return all(t == 0 and g == 0 for t, g in self.coeffs)

    def _check(self, other: "ChowClass"):
        if not isinstance(other, ChowClass):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError(f"mismatched ring specs {self.spec} and {other.spec}")
        return None

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChowClass.scalar(self.spec, other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ChowClass(
            self.spec,
            [(a + c, b + d) for (a, b), (c, d) in zip(self.coeffs, other.coeffs)],
        )

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.spec, [(-t, -g) for t, g in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return ChowClass(self.spec, [(c * t, c * g) for t, g in self.coeffs])
        if self._check(other) is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rational(c)
        return self * (1 / c)

    def __pow__(self, k: int) -> "ChowClass":
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = ChowClass.one(self.spec)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        terms = []
        for k, (t, g) in enumerate(self.coeffs):
            if t:
                terms.append(f"{t}*T^{k}")
            if g:
                terms.append(f"{g}*T^{k - 1}G")
        return f"ChowClass(n={self.spec.n}, degE={self.spec.degE}: {' + '.join(terms) or '0'})"


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    """Graded product with ``G^2 = 0``, truncated above degree ``n + 1``."""
    if x.spec != y.spec:
        raise ValueError(f"mismatched ring specs {x.spec} and {y.spec}")
    top = x.spec.top
    out = [[_ZERO, _ZERO] for _ in range(top + 1)]
    for i, (t1, g1) in enumerate(x.coeffs):
        if not (t1 or g1):
            continue
        for j in range(top + 1 - i):
            t2, g2 = y.coeffs[j]
            if not (t2 or g2):
                continue
            out[i + j][0] += t1 * t2
            out[i + j][1] += t1 * g2 + g1 * t2
    return ChowClass(x.spec, out)


def evaluate_top(x: ChowClass) -> Fraction:
    """Degree of the top-dimensional part; lower degrees are ignored."""
    t, g = x.coeffs[x.spec.top]
    return t * x.spec.degE + g


def exp_class(divisor: ChowClass, sign: int = 1) -> ChowClass:
    """Truncated exponential ``sum_j (sign * divisor)^j / j!``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not divisor.is_homogeneous(1):
        raise ValueError("exp_class expects a homogeneous degree-1 class")
    spec = divisor.spec
    t, g = divisor.coeffs[1]
    t, g = sign * t, sign * g
    # (tT + gG)^j = t^j T^j + j t^(j-1) g T^(j-1) G  because G^2 = 0
    coeffs = [(1, 0)]
    for j in range(1, spec.top + 1):
        f = factorial(j)
        coeffs.append((Fraction(t**j, f), Fraction(j * t ** (j - 1) * g, f)))
    return ChowClass(spec, coeffs)


def _same_spec(rhos: Sequence[ChowClass]) -> RingSpec:
    if not rhos:
        raise ValueError("need at least one class")
    spec = rhos[0].spec
    for r in rhos:
        if r.spec != spec:
            raise ValueError("mismatched ring specs")
    return spec


def koszul_ch(rhos: Sequence[ChowClass]) -> ChowClass:
    """Chern character of the Koszul complex with Chern roots ``rhos``.

    ``sum_k (-1)^k sum_{|S| = k} exp(-sum_{i in S} rho_i)``.
    """
    spec = _same_spec(rhos)
    total = ChowClass.zero(spec)
    for k in range(len(rhos) + 1):
        for subset in combinations(rhos, k):
            s = ChowClass.zero(spec)
            for r in subset:
                s = s + r
            term = exp_class(s, -1)
            total = total + term if k % 2 == 0 else total - term
    return total


def _product(spec: RingSpec, classes: Iterable[ChowClass]) -> ChowClass:
    p = ChowClass.one(spec)
    for c in classes:
        p = p * c
    return p


def ch_OX_closed(rhos: Sequence[ChowClass]) -> ChowClass:
    """Closed form of ``ch(O_X)`` for the zero locus of a rank ``n - 1`` bundle."""
    spec = _same_spec(rhos)
    if len(rhos) != spec.n - 1:
        raise ValueError(f"expected {spec.n - 1} classes, got {len(rhos)}")
    s1 = sum(rhos, ChowClass.zero(spec))
    pairs = sum((a * b for a, b in combinations(rhos, 2)), ChowClass.zero(spec))
    squares = sum((r * r for r in rhos), ChowClass.zero(spec))
    factor = 1 - s1 / 2 + pairs / 4 + squares / 6
    return factor * _product(spec, rhos)


def ch_OC_closed(rhos: Sequence[ChowClass]) -> ChowClass:
    """Closed form of ``ch(O_C')`` for the zero locus of a rank ``n`` bundle."""
    spec = _same_spec(rhos)
    if len(rhos) != spec.n:
        raise ValueError(f"expected {spec.n} classes, got {len(rhos)}")
    s1 = sum(rhos, ChowClass.zero(spec))
    return (1 - s1 / 2) * _product(spec, rhos)


@lru_cache(maxsize=None)
def todd_series(order: int) -> tuple:
    """Coefficients of ``x / (1 - e^-x)`` up to ``x^order``.

    Obtained by inverting ``(1 - e^-x) / x = sum_j (-1)^j x^j / (j+1)!``.
    """
    f = [Fraction((-1) ** j, factorial(j + 1)) for j in range(order + 1)]
    inv = [Fraction(1)]
    for k in range(1, order + 1):
        inv.append(-sum(f[j] * inv[k - j] for j in range(1, k + 1)))
    return tuple(inv)


def todd_relative(spec: RingSpec) -> ChowClass:
    """Todd class of the relative tangent bundle of ``W -> B``.

    The Chern roots are ``T - eta_i`` (``i = 1..n+1``) with ``sum eta_i = deg E G``.
    Since ``G^2 = 0`` only the first elementary symmetric function of the
    ``eta_i`` survives, so the equal split ``eta_i = deg E G / (n + 1)`` is exact.
    """
    coeffs = todd_series(spec.top)
    root = ChowClass.divisor(spec, 1, Fraction(-spec.degE, spec.n + 1))
    td_root = ChowClass.zero(spec)
    power = ChowClass.one(spec)
    for c in coeffs:
        td_root = td_root + power * c
        power = power * root
    return td_root ** (spec.n + 1)


def grr_pushforward_degree(n: int, d: int, e: int, degfL: int, a: Sequence[int]) -> Fraction:
    """``deg pi_* O_X(e)`` from Grothendieck-Riemann-Roch on ``W``.

    ``X`` is cut out by a rank ``n - 1`` bundle with Chern roots ``d T + a_i G``
    and ``deg E = degfL``.
    """
    if e < 1:
        raise ValueError("twist e must be >= 1")
    if len(a) != n - 1:
        raise ValueError(f"expected {n - 1} values of a, got {len(a)}")
    spec = RingSpec(n, degfL)
    rhos = [ChowClass.divisor(spec, d, ai) for ai in a]
    integrand = ch_OX_closed(rhos) * exp_class(ChowClass.divisor(spec, e, 0)) * todd_relative(spec)
    return evaluate_top(integrand)
