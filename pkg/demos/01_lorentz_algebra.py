"""
Lorentz generators and their exponentials
=========================================

Build the rotation and boost generators, check their commutators, and
exponentiate a few combinations in closed form.
"""

# %%
import numpy as np

from littlegroup import lie_core

np.set_printoptions(precision=4, suppress=True)
g = lie_core.standard_generators()
print("J3 =\n", g["J3"])
print("K3 =\n", g["K3"])

# %%
# Rotations close among themselves; boosts do not, they commute into rotations.
print("[J1, J2] - i J3 :", np.abs(lie_core.commutator(g["J1"], g["J2"]) - 1j * g["J3"]).max())
print("[K1, K2] + i J3 :", np.abs(lie_core.commutator(g["K1"], g["K2"]) + 1j * g["J3"]).max())

# %%
# exp(-i eta K3) is the boost along z.
eta = 0.8
print(lie_core.exp_generator("K3", eta))
print(lie_core.boost_z(eta))

# %%
# A mixed rotation + boost, exponentiated from its two invariants.
mixed = 0.4 * g["J3"] + 0.9 * g["K3"] - 0.3 * g["K1"]
elem = lie_core.exp_generator(mixed, 2.0)
print("Lorentz matrix?", lie_core.is_lorentz(elem))
v = lie_core.four_vector(0.1, 0.2, 0.3, 1.0)
print("norm before / after:", lie_core.minkowski_norm(v), lie_core.minkowski_norm(lie_core.apply(elem, v)))
