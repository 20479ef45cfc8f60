"""
Eliminating to the slope identity
=================================

Two linear relations among K^2, chi and the auxiliary degrees are combined
so that K^2 is written against chi plus correction terms.
"""

from ci_slope.exact_arith import format_rational
from ci_slope.fibration_invariants import lambda_nd
from ci_slope.slope_elimination import eliminate, round_trip

for n, d in [(2, 4), (3, 3), (4, 3)]:
    for m in (5, 10, 100):
        res = eliminate(n, d, m)
        assert res.lambda_coeff == lambda_nd(n, d)
        assert all(f.is_zero() for f in round_trip(res))
        print(
            (n, d, m),
            "lambda", format_rational(res.lambda_coeff),
            "p", [format_rational(p) for p in (res.p1, res.p2, res.p3)],
            "c", res.c_coeff,
        )

print(eliminate(3, 3, 100).k2_expression)
