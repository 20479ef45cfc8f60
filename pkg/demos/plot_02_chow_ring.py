"""
Working in the numerical Chow ring of a projective bundle
=========================================================

Classes are polynomials in T (the tautological class) and Gamma (a fibre),
reduced by Gamma^2 = 0, T^{n+1} = deg E and T^n Gamma = 1.
"""

from ci_slope.chow_ring import (
    ChowClass,
    RingSpec,
    ch_OX_closed,
    evaluate_top,
    grr_pushforward_degree,
    koszul_ch,
    todd_relative,
)
from ci_slope.fibration_invariants import eprime, uvr

spec = RingSpec(n=3, degE=1)
T = ChowClass.divisor(spec, 1, 0)
G = ChowClass.divisor(spec, 0, 1)
print("T^4 =", evaluate_top(T ** 4), "  T^3 G =", evaluate_top(T ** 3 * G), "  G^2 =", (G * G).is_zero())

# two cubics: rho_i = 3T + a_i Gamma
rhos = [ChowClass.divisor(spec, 3, a) for a in (0, 1)]
assert koszul_ch(rhos) == ch_OX_closed(rhos)
print("ch(O_X) top degree:", evaluate_top(ch_OX_closed(rhos)))

print("relative Todd class, degree 1 part:", todd_relative(spec).degree_part(1))

# pushforward degree by GRR, compared with the polynomials u, v at e = m e'
u, v, r = uvr(3, 3, 2)
e = 2 * eprime(3, 3)
print("u, v =", u, v, "  GRR:", grr_pushforward_degree(3, 3, e, 1, [0, 0]), grr_pushforward_degree(3, 3, e, 0, [1, 0]))
