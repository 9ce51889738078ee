"""Wigner little groups of a four-momentum and the gauge action of N1, N2."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .lie_core import (
    apply,
    boost_z,
    exp_generator,
    four_vector,
    minkowski_norm,
    n_generators,
    standard_generators,
)

__all__ = [
    "ParticleClass",
    "TachyonicMomentumError",
    "FourPotential",
    "classify",
    "rest_boost",
    "little_group_generators",
    "verify_invariance",
    "gauge_element",
    "gauge_transform",
]

DEFAULT_REL_TOL = 1e-9


class ParticleClass(enum.Enum):
    MASSIVE = "Massive"
    MASSLESS = "Massless"


class TachyonicMomentumError(ValueError):
    """Raised for spacelike four-momenta."""


@dataclass(frozen=True)
class FourPotential:
    """Amplitudes of the plane wave ``A exp(i(k z - omega t))``.

    The phase is carried only as the pair ``(k, omega)``; the gauge action
    touches the amplitudes ``(a1, a2, a3, a0)``.
    """

    a1: float
    a2: float
    a3: float
    a0: float
    k: float = 1.0
    omega: float = 1.0

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([self.a1, self.a2, self.a3, self.a0])

    @property
    def lorentz_condition(self) -> bool:
        return self.a3 == self.a0


def classify(p, rel_tol: float = DEFAULT_REL_TOL) -> ParticleClass:
    """Massive or massless, judged by ``p.p`` relative to ``t**2``.

    Raises
    ------
    ValueError
        For nonpositive energy.
    TachyonicMomentumError
        For spacelike momenta.
    """
    p = four_vector(p)
    energy = p[3]
    if not energy > 0:
        raise ValueError(f"energy component must be positive, got {energy!r}")
    norm = minkowski_norm(p)
    scale = rel_tol * energy**2
    if abs(norm) <= scale:
        return ParticleClass.MASSLESS
    if norm < -scale:
        return ParticleClass.MASSIVE
    raise TachyonicMomentumError("tachyonic: unsupported (spacelike four-momentum)")


def rest_boost(p) -> np.ndarray:
    """Pure boost taking the rest momentum ``(0, 0, 0, m)`` to the timelike ``p``."""
    p = four_vector(p)
    mass = np.sqrt(-minkowski_norm(p))
    gamma = p[3] / mass
    beta_gamma = p[:3] / mass
    b = np.eye(4)
    b[:3, 3] = b[3, :3] = beta_gamma
    b[3, 3] = gamma
    b[:3, :3] += np.outer(beta_gamma, beta_gamma) / (1.0 + gamma)
    return b


def little_group_generators(p, rel_tol: float = DEFAULT_REL_TOL) -> list[np.ndarray]:
    """Generators of the little group of ``p``.

    A massive momentum gets the three rotation generators conjugated by
    the pure boost from its rest frame; along ``z`` this is
    ``[B J1 B^-1, B J2 B^-1, J3]`` with ``B = boost_z(eta)``.  A massless
    momentum must point along ``+z`` and gets ``[J3, N1, N2]``.  Every
    returned ``G`` satisfies ``G @ p == 0``.
    """
    p = four_vector(p)
    kind = classify(p, rel_tol)
    gens = standard_generators()
    if kind is ParticleClass.MASSLESS:
        if np.hypot(p[0], p[1]) > rel_tol * p[3] or p[2] <= 0:
            raise ValueError("massless momentum must point along +z")
        n1, n2 = n_generators()
        return [gens["J3"].copy(), n1, n2]
    b = rest_boost(p)
    b_inv = np.linalg.inv(b)
    return [b @ gens[f"J{k}"] @ b_inv for k in (1, 2, 3)]


def verify_invariance(p, params, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Largest component change of ``p`` under the product of little-group
    elements ``exp(-i params[k] G_k)``."""
    p = four_vector(p)
    gens = little_group_generators(p, rel_tol)
    params = list(params)
    if len(params) != len(gens):
        raise ValueError(f"need {len(gens)} parameters, got {len(params)}")
    elem = np.eye(4)
    for g, theta in zip(gens, params):
        elem = exp_generator(g, theta) @ elem
    return float(np.abs(apply(elem, p) - p).max())


def gauge_element(u: float, v: float) -> np.ndarray:
    """``exp(-i(u N1 + v N2))``.

    The series terminates after the quadratic term because the ``N``
    combination is nilpotent of order three.

    >>> gauge_element(1.0, 0.0)[3]
    array([ 1. ,  0. , -0.5,  1.5])
    """
    n1, n2 = n_generators()
    a = np.real(-1j * (u * n1 + v * n2))
    return np.eye(4) + a + 0.5 * (a @ a)


def gauge_transform(a: FourPotential, u: float, v: float) -> FourPotential:
    """Apply the gauge element to the amplitudes of a massless plane wave.

    The transverse amplitudes stay put and ``a3``, ``a0`` both shift by
    ``u*a1 + v*a2``, i.e. the change is along the photon momentum.

    Raises
    ------
    ValueError
        If ``a3 != a0`` or ``k != omega``.
    """
    if not a.lorentz_condition:
        raise ValueError(f"Lorentz condition violated: a3={a.a3!r} != a0={a.a0!r}")
    if a.k != a.omega:
        raise ValueError(f"plane wave is not lightlike: k={a.k!r} != omega={a.omega!r}")
    # equal to gauge_element(u, v) @ amplitudes when a3 == a0, without the
    # rounding in (1 - s/2) a3 + (s/2) a0 that would break a3 == a0
    shift = u * a.a1 + v * a.a2
    return replace(a, a3=a.a3 + shift, a0=a.a0 + shift)
