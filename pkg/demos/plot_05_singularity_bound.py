"""
Signature bound for isolated surface singularities
==================================================

Milnor number, signature and the bound for a smoothing of a complete
intersection surface singularity. Rational double points attain equality.
"""

import random

from ci_slope.singularity_calc import SingularityInput, check_theorem
from ci_slope.verify import ADE, random_singularity

for name, rank in ADE.items():
    rep = check_theorem(SingularityInput(emb_dim=3, pg=0, K2=0, exc_count=rank))
    print(name, "sigma", rep.sigma, "bound", rep.bound, "equality", rep.equality)

rep = check_theorem(SingularityInput(emb_dim=3, pg=1, K2=-1, exc_count=1))
print("mu", rep.mu, "sigma", rep.sigma, "bound", rep.bound, "margin", rep.margin)

# random numerical data need not come from a smoothing, so margins can be negative
rng = random.Random(0)
margins = [check_theorem(random_singularity(rng)).margin for _ in range(200)]
print("min margin", min(margins), "max margin", max(margins))
