"""
Contracting the rotation group into the gauge group
===================================================

Boost the transverse rotation generators along z, divide by cosh(eta),
and watch them approach N1 and N2.
"""

# %%
import numpy as np

from littlegroup import contraction

etas = np.arange(1.0, 11.0)
r = contraction.contraction_report(list(etas))
for eta, d1, d2 in zip(r.etas, r.deviations_n1, r.deviations_n2):
    print(f"eta={eta:4.1f}  |J2' - N1| = {d1:.3e}   |J1' - N2| = {d2:.3e}   2e^(-2eta) = {2 * np.exp(-2 * eta):.3e}")
print("fitted log-slope:", r.fitted_decay_rate)

# %%
# The limit generators fix the photon momentum (0, 0, 1, 1).
print("limit invariance:", r.limit_invariance)
