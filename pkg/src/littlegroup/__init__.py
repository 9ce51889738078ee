"""Wigner little groups, their contraction, and the Lorentz-squeezed oscillator.

Submodules
----------
lie_core       Lorentz generators, commutators, closed-form exponentials
little_groups  little groups of a four-momentum, gauge action on photons
contraction    boosted rotations -> N1, N2 as the rapidity grows
oscillator     squeezed ground state in the (z, t) plane and its moments
parton         boost factors and widths behind the parton picture
cli            ``littlegroup`` command-line front end
"""

from .contraction import ContractionReport, contracted_generator, contraction_report
from .lie_core import (
    apply,
    boost_z,
    commutator,
    exp_generator,
    minkowski_norm,
    n_generators,
    standard_generators,
)
from .little_groups import (
    FourPotential,
    ParticleClass,
    classify,
    gauge_element,
    gauge_transform,
    little_group_generators,
    verify_invariance,
)
from .oscillator import Grid2D, SqueezedState, amplitude, covariance, momentum_amplitude, sample_grid
from .parton import PartonReport, interaction_ratio, parton_report, rapidity_from_energy

__version__ = "0.1.0"
