"""
Binomial sums and the A-coefficients
====================================

Three ways to compute the alternating binomial sums, and the
coefficients of the Hilbert-type polynomial of a complete intersection.
"""

from fractions import Fraction

from ci_slope.exact_arith import format_rational, sigma_closed, sigma_direct, sigma_recursive
from ci_slope.fibration_invariants import A_coefficients, eprime, genus
from ci_slope.oracles import a_coeffs_bruteforce

# sigma_{m,l}: direct sum, closed form (l <= m+2) and the recursion agree
for m in range(1, 5):
    row = [sigma_direct(m, l) for l in range(m + 3)]
    assert row == [sigma_closed(m, l) for l in range(m + 3)]
    assert row == [sigma_recursive(m, l) for l in range(m + 3)]
    print(m, row)

# A-coefficients from the closed form against a term-by-term expansion
for n, d in [(2, 4), (3, 3), (4, 2)]:
    A = A_coefficients(n, d)
    assert A == a_coeffs_bruteforce(n, d)
    print((n, d), "A =", [format_rational(x) for x in A], " e' =", eprime(n, d), " g =", genus(n, d))

# fractions print as p/q
print(format_rational(Fraction(sigma_closed(3, 5), 7)))
