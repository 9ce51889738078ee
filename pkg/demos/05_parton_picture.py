"""
Parton picture at Fermilab energies
===================================

For a 900 GeV proton the oscillation period dilates by e^eta while an
oncoming probe sees the hadron for a time shrunk by e^-eta.
"""

# %%
import numpy as np

from littlegroup import parton

r = parton.parton_report(900.0, parton.PROTON_MASS_GEV)
for key, value in r.as_dict().items():
    print(f"{key:18s} {value:.6g}")

# %%
# Position and momentum widths grow together as the proton speeds up.
for energy in (0.938, 2.0, 10.0, 100.0, 900.0):
    rep = parton.parton_report(energy)
    print(f"E={energy:7.3f} GeV  eta={rep.eta:6.3f}  widths {rep.spatial_width:9.3f} {rep.momentum_width:9.3f}"
          f"  ratio {rep.interaction_ratio:.2e}")

# %%
# The longitudinal momentum distribution spreads out.
q = np.linspace(-10, 10, 9)
for eta in (0.0, 1.0, 2.0):
    print(eta, np.round(parton.longitudinal_momentum_distribution(eta, q), 4))
