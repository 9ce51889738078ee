"""
Little groups and photon gauge transformations
==============================================

A massive particle keeps its momentum under (boosted) rotations; a
massless one under J3 and the two translation-like generators N1, N2,
which shift a photon potential along its own momentum.
"""

# %%
import numpy as np

from littlegroup import little_groups as lg
from littlegroup.lie_core import apply

np.set_printoptions(precision=4, suppress=True)

for p in ([0, 0, 0, 1.0], [0, 0, np.sinh(2.0), np.cosh(2.0)], [0, 0, 1.0, 1.0]):
    kind = lg.classify(p)
    dev = lg.verify_invariance(p, [0.7, 1.2, -0.5])
    print(f"p = {p}: {kind.value}, momentum change under the little group {dev:.1e}")

# %%
# The gauge element exp(-i(u N1 + v N2)) for u = 0.3, v = -0.4.
g = lg.gauge_element(0.3, -0.4)
print(g)
print("photon momentum:", apply(g, [0, 0, 2.0, 2.0]))

# %%
# Acting on the amplitudes of A exp(i(kz - wt)) with A3 = A0 adds a multiple of (0, 0, 1, 1).
a = lg.FourPotential(1.0, 0.5, 0.2, 0.2)
print(lg.gauge_transform(a, u=1.0, v=2.0))
