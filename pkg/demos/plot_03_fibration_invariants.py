"""
Invariants of a family of complete intersections
================================================

K^2 and chi of a fibred surface cut out in P_B(E), three ways.
"""

from ci_slope.fibration_invariants import (
    FibrationConfig,
    chi_incl_excl,
    genus,
    invariants_closed,
    k2_chow,
    lambda_nd,
)

cfg = FibrationConfig(n=3, d=3, b=0, degE=1, a=(0, 0))
rep = invariants_closed(cfg)
print("K2 =", rep.K2, " chi =", rep.chi, " g =", rep.genus, " lambda =", rep.lambda_)

# intersection product in the Chow ring
assert k2_chow(cfg) == rep.K2
# Euler characteristic of O_X by inclusion-exclusion, shifted by (g-1)(b-1)
assert chi_incl_excl(cfg) == rep.chi + (genus(3, 3) - 1) * (cfg.b - 1)

# the slope equality K^2 = lambda chi over a few families
for a in [(0, 0), (1, 0), (2, 1), (-1, 2)]:
    for degE in (0, 1, 3):
        r = invariants_closed(FibrationConfig(3, 3, 1, degE, a))
        print(a, degE, r.K2, r.chi, r.K2 == lambda_nd(3, 3) * r.chi)

# negative chi is flagged rather than rejected
print(invariants_closed(FibrationConfig(3, 3, 0, -2, (0, 0))).diagnostics)
