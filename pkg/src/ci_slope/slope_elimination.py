"""Elimination of ``deg f_* L`` between the two linear relations of the slope proof.

Both relations are linear in the unknowns

    K2       K_f^2
    chi      chi_f
    degfL    deg f_* L
    c        degree of the correction divisor between Sym^e f_* L and f_* w^m
    ell      length of the torsion cokernel
    EC       residual intersection term (Z/m + E) C, with Z = 0 for m large
    deltaPa  2 p_a(C') - 2 g(C), nonnegative

and depend on ``(n, d, m)`` only through ``e = m e'`` and the coefficients
``u, v`` of the pushforward degree. Each relation is stored as a
:class:`LinearForm` meaning ``form == 0``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import DegenerateElimination, DegenerateFiberGenus, EliminationSingularity
from .exact_arith import as_rational
from .fibration_invariants import eprime, uvr

__all__ = [
    "VARIABLES",
    "LinearForm",
    "EliminationCoefficients",
    "lemma22_form",
    "lemma23_form",
    "eliminate",
    "round_trip",
]

VARIABLES = ("K2", "chi", "degfL", "c", "ell", "EC", "deltaPa")


@dataclass(frozen=True)
class LinearForm:
    coefficients: Mapping[str, Fraction] = field(default_factory=dict)
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        cleaned = {}
        for name, value in self.coefficients.items():
            if name not in VARIABLES:
                raise KeyError(f"unknown variable {name!r}")
            value = as_rational(value)
            if value:
                cleaned[name] = value
        object.__setattr__(self, "coefficients", dict(sorted(cleaned.items())))
        object.__setattr__(self, "constant", as_rational(self.constant))

    def __getitem__(self, name: str) -> Fraction:
        if name not in VARIABLES:
            raise KeyError(name)
        return self.coefficients.get(name, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coefficients == other.coefficients and self.constant == other.constant

    def __add__(self, other: "LinearForm") -> "LinearForm":
        coeffs = dict(self.coefficients)
        for name, value in other.coefficients.items():
            coeffs[name] = coeffs.get(name, 0) + value
        return LinearForm(coeffs, self.constant + other.constant)

    def __mul__(self, c) -> "LinearForm":
        c = as_rational(c)
        return LinearForm({k: c * v for k, v in self.coefficients.items()}, c * self.constant)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.coefficients and self.constant == 0

    def solve_for(self, name: str) -> "LinearForm":
        """Expression for ``name`` in terms of the other variables, from ``self == 0``."""
        coeff = self[name]
        if coeff == 0:
            raise ZeroDivisionError(f"{name} does not occur in the form")
        rest = {k: v for k, v in self.coefficients.items() if k != name}
        return LinearForm(rest, self.constant) * (-1 / coeff)

    def substitute(self, name: str, expr: "LinearForm") -> "LinearForm":
        coeff = self[name]
        rest = LinearForm({k: v for k, v in self.coefficients.items() if k != name}, self.constant)
        return rest + expr * coeff


@dataclass(frozen=True)
class EliminationCoefficients:
    """``K2 = lambda_coeff chi + p1 (p_a(C') - g(C)) + p2 ell + p3 EC + c_coeff c``."""

    n: int
    d: int
    m: int
    lambda_coeff: Fraction
    p1: Fraction
    p2: Fraction
    p3: Fraction
    c_coeff: Fraction
    # the same identity as a LinearForm expressing K2 over {chi, deltaPa, ell, EC, c}
    k2_expression: LinearForm = field(repr=False, default_factory=LinearForm)


def _check_range(n: int, d: int, m: int) -> int:
    ep = eprime(n, d)
    if ep <= 0:
        raise DegenerateFiberGenus(f"e' = {ep} <= 0 for n={n}, d={d}; fibers have genus <= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    return ep


def lemma22_form(n: int, d: int, m: int) -> LinearForm:
    """Genus comparison of ``C`` and its image ``C'``, with ``M^2 = m^2 K2``."""
    ep = _check_range(n, d, m)
    e = m * ep
    dn1 = d ** (n - 1)
    return LinearForm(
        {
            "deltaPa": 1,
            "K2": -Fraction(d, e) * m * m,
            "degfL": dn1 * e * (d - 1),
            "c": dn1 * (ep + 2 * d),
            "ell": dn1 * (ep + d),
            "EC": 1,
        }
    )


def lemma23_form(n: int, d: int, m: int) -> LinearForm:
    """Two computations of ``deg pi_* O_X(e)`` equated, with ``Z = 0``."""
    ep = _check_range(n, d, m)
    e = m * ep
    u, v, _ = uvr(n, d, m)
    if u - d * v == 0:
        raise EliminationSingularity(f"u - d v = 0 at n={n}, d={d}, m={m}")
    dn2 = d ** (n - 2)
    return LinearForm(
        {
            "K2": Fraction(m * (m - 1), 2) - m * m * v / (dn2 * e * e),
            "chi": 1,
            "c": 2 * d * v / e - (1 - Fraction(1, 2 * m)) * d ** (n - 1) * e,
            "ell": d * v / e - 1,
            "degfL": -(u - d * v),
        }
    )


def eliminate(n: int, d: int, m: int) -> EliminationCoefficients:
    f22 = lemma22_form(n, d, m)
    f23 = lemma23_form(n, d, m)
    combined = f22.substitute("degfL", f23.solve_for("degfL"))
    if combined["K2"] == 0:
        raise DegenerateElimination(f"K2 drops out of the combined relation at m={m}")
    k2 = combined.solve_for("K2")
    return EliminationCoefficients(
        n=n,
        d=d,
        m=m,
        lambda_coeff=k2["chi"],
        # the form uses deltaPa = 2 (p_a(C') - g(C))
        p1=2 * k2["deltaPa"],
        p2=k2["ell"],
        p3=k2["EC"],
        c_coeff=k2["c"],
        k2_expression=k2,
    )


def round_trip(coeffs: EliminationCoefficients) -> tuple:
    """Substitute the solved ``K2`` and ``degfL`` back into both relations.

    Returns the two residual forms; both are zero when the elimination is exact.
    """
    n, d, m = coeffs.n, coeffs.d, coeffs.m
    f22 = lemma22_form(n, d, m)
    f23 = lemma23_form(n, d, m)
    k2 = coeffs.k2_expression
    degfl = f23.solve_for("degfL").substitute("K2", k2)
    residuals = []
    for form in (f22, f23):
        r = form.substitute("K2", k2).substitute("degfL", degfl)
        residuals.append(r)
    return tuple(residuals)
