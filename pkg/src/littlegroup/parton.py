"""Parton-picture quantities of a fast hadron in the squeezed-oscillator model."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import oscillator

__all__ = [
    "PROTON_MASS_GEV",
    "PartonReport",
    "rapidity_from_energy",
    "period_dilation",
    "interaction_ratio",
    "longitudinal_momentum_distribution",
    "parton_report",
]

PROTON_MASS_GEV = 0.938


def rapidity_from_energy(energy: float, mass: float = PROTON_MASS_GEV) -> float:
    """``arccosh(energy / mass)`` for total energy ``energy``.

    Raises
    ------
    ValueError
        If ``mass <= 0`` or ``energy < mass``.
    """
    if not (mass > 0 and math.isfinite(mass)):
        raise ValueError(f"mass must be positive and finite, got {mass!r}")
    if not (energy >= mass and math.isfinite(energy)):
        raise ValueError(f"energy {energy!r} is below the mass {mass!r}")
    return math.acosh(energy / mass)


def period_dilation(eta: float) -> float:
    """Stretch factor ``exp(eta)`` of the major light-cone axis; the
    internal oscillation period grows by it."""
    return math.exp(eta)


def interaction_ratio(eta: float) -> float:
    """Interaction time with an oncoming probe over the internal period, ``exp(-2 eta)``."""
    return math.exp(-2.0 * eta)


def longitudinal_momentum_distribution(eta: float, q_z_samples, n_quad: int = 2001) -> np.ndarray:
    """Marginal density of ``q_z``: the integral of ``|phi_eta(q_z, q_0)|**2`` over ``q_0``.

    For each ``q_z`` the integrand in ``q_0`` is a Gaussian with centre
    ``-tanh(2 eta) q_z`` and variance ``1 / (2 cosh 2 eta)``; the trapezoid
    rule is applied on ``n_quad`` nodes spanning twelve of its standard
    deviations either side.
    """
    q_z = np.atleast_1d(np.asarray(q_z_samples, dtype=float))
    if not np.all(np.isfinite(q_z)):
        raise ValueError("q_z samples must be finite")
    c2 = math.cosh(2.0 * eta)
    sd = math.sqrt(0.5 / c2)
    offsets = np.linspace(-12.0 * sd, 12.0 * sd, n_quad)
    centre = -math.tanh(2.0 * eta) * q_z
    q_0 = centre[:, None] + offsets[None, :]
    dens = oscillator.momentum_amplitude(eta, q_z[:, None], q_0) ** 2
    return np.trapezoid(dens, offsets, axis=1)


@dataclass(frozen=True)
class PartonReport:
    energy: float
    mass: float
    eta: float
    gamma: float
    period_dilation: float
    interaction_ratio: float
    spatial_width: float
    momentum_width: float

    def as_dict(self) -> dict:
        return asdict(self)


def parton_report(energy: float, mass: float = PROTON_MASS_GEV) -> PartonReport:
    """Collect the boost factors and longitudinal widths for a hadron of
    total energy ``energy`` and mass ``mass`` (GeV).

    Both widths are ``sqrt(cosh(2 eta)/2)``: the position and momentum
    distributions spread together instead of trading off.
    """
    eta = rapidity_from_energy(energy, mass)
    width_z = math.sqrt(oscillator.covariance(eta)[0, 0])
    rot = oscillator.momentum_to_position_axes
    cov_q = rot.T @ oscillator.covariance(eta) @ rot
    width_q = math.sqrt(cov_q[0, 0])
    return PartonReport(
        energy=float(energy),
        mass=float(mass),
        eta=eta,
        gamma=energy / mass,
        period_dilation=period_dilation(eta),
        interaction_ratio=interaction_ratio(eta),
        spatial_width=width_z,
        momentum_width=width_q,
    )
