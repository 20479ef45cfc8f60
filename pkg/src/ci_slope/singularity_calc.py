"""Milnor fiber signature of a surface complete intersection singularity.

Inputs are resolution-level integers of the minimal resolution: geometric
genus ``pg``, the self-intersection ``K2`` of the canonical cycle, the number
of exceptional components and the nullity ``mu0`` of the intersection form.
The embedding dimension follows the convention ``(X, o) ⊂ (C^n, o)``.

From Laufer's formula ``mu = 12 pg + K2 + chi_top - 1``, Durfee's equality
``2 pg = mu_+ + mu_0`` and ``chi_top = #exc + 1 - mu0`` one gets
``sigma = -8 pg - K2 - #exc``, which is compared to the bound
``-8 pg / (3n - 5) - #exc``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentData

__all__ = [
    "SingularityInput",
    "SignatureReport",
    "EQUALITY_CAPTION",
    "chi_top",
    "milnor_number",
    "signature_decomposition",
    "durfee_bound",
    "equivalent_coefficient",
    "check_theorem",
    "margin_identity",
]

EQUALITY_CAPTION = "equality holds iff rational double point"


@dataclass(frozen=True)
class SingularityInput:
    emb_dim: int
    pg: int
    K2: int
    exc_count: int
    mu0: int = 0

    def __post_init__(self):
        if self.emb_dim < 3:
            raise InconsistentData(f"embedding dimension must be >= 3, got {self.emb_dim}")
        if self.pg < 0:
            raise InconsistentData("pg must be >= 0")
        if self.exc_count < 1:
            raise InconsistentData("need at least one exceptional component")
        if self.mu0 < 0:
            raise InconsistentData("mu0 must be >= 0")
        if 2 * self.pg - self.mu0 < 0:
            raise InconsistentData(f"2 pg - mu0 = {2 * self.pg - self.mu0} < 0 violates Durfee's equality")


@dataclass(frozen=True)
class SignatureReport:
    mu: int
    mu_plus: int
    mu_minus: int
    mu_zero: int
    sigma: int
    chi_top: int
    bound: Fraction
    satisfied: bool
    equality: bool
    margin: Fraction
    # the equivalent form  coeff * pg <= mu + 1 - chi_top
    equiv_lhs: Fraction = Fraction(0)
    equiv_rhs: int = 0
    equiv_satisfied: bool = True
    equiv_equality: bool = False
    # same denominator written in the ambient-dimension convention C^(n'+1), n' = emb_dim - 1
    proof_index: int = 0
    proof_denominator: int = 0
    caption: str = ""


def chi_top(exc_count: int, mu0: int) -> int:
    if exc_count < 1 or mu0 < 0:
        raise InconsistentData("need exc_count >= 1 and mu0 >= 0")
    return exc_count + 1 - mu0


def milnor_number(pg: int, K2: int, chi_top: int) -> int:
    mu = 12 * pg + K2 + chi_top - 1
    if mu < 0:
        raise InconsistentData(f"Laufer's formula gives mu = {mu} < 0")
    return mu


def signature_decomposition(inp: SingularityInput) -> SignatureReport:
    """Fill in ``mu``, ``mu_+``, ``mu_-``, ``mu_0`` and ``sigma``.

    The bound-related fields are those of :func:`check_theorem`.
    """
    return check_theorem(inp)


def _decompose(inp: SingularityInput):
    ct = chi_top(inp.exc_count, inp.mu0)
    mu = milnor_number(inp.pg, inp.K2, ct)
    mu_plus = 2 * inp.pg - inp.mu0
    mu_minus = mu - mu_plus - inp.mu0
    if mu_minus < 0:
        raise InconsistentData(f"mu_- = {mu_minus} < 0: resolution data is inconsistent")
    return ct, mu, mu_plus, mu_minus


def durfee_bound(emb_dim: int, pg: int, exc_count: int) -> Fraction:
    if emb_dim < 3:
        raise InconsistentData("embedding dimension must be >= 3")
    return Fraction(-8 * pg, 3 * emb_dim - 5) - exc_count


def equivalent_coefficient(emb_dim: int) -> Fraction:
    """Coefficient ``12(n-1)/(3n-5)`` of ``pg``; equals 6 for hypersurfaces."""
    return Fraction(12 * (emb_dim - 1), 3 * emb_dim - 5)


def check_theorem(inp: SingularityInput) -> SignatureReport:
    ct, mu, mu_plus, mu_minus = _decompose(inp)
    sigma = mu_plus - mu_minus
    bound = durfee_bound(inp.emb_dim, inp.pg, inp.exc_count)
    lhs = equivalent_coefficient(inp.emb_dim) * inp.pg
    rhs = mu + 1 - ct
    satisfied, equality = sigma <= bound, sigma == bound
    equiv_satisfied, equiv_equality = lhs <= rhs, lhs == rhs
    if (satisfied, equality) != (equiv_satisfied, equiv_equality):
        raise ArithmeticError(f"the two forms of the bound disagree on {inp}")
    return SignatureReport(
        mu=mu,
        mu_plus=mu_plus,
        mu_minus=mu_minus,
        mu_zero=inp.mu0,
        sigma=sigma,
        chi_top=ct,
        bound=bound,
        satisfied=satisfied,
        equality=equality,
        margin=bound - sigma,
        equiv_lhs=lhs,
        equiv_rhs=rhs,
        equiv_satisfied=equiv_satisfied,
        equiv_equality=equiv_equality,
        proof_index=inp.emb_dim - 1,
        proof_denominator=3 * (inp.emb_dim - 1) - 2,
        caption=EQUALITY_CAPTION if equality else "",
    )


def margin_identity(inp: SingularityInput) -> Fraction:
    """``K2 + 24(n-2)/(3n-5) pg``, which equals ``bound - sigma``."""
    return inp.K2 + Fraction(24 * (inp.emb_dim - 2), 3 * inp.emb_dim - 5) * inp.pg
