"""Covariant harmonic oscillator in the longitudinal (z, t) plane.

The ground state of two bound quarks, written in their space-time
separation, is a Gaussian that a boost along ``z`` squeezes along the
light-cone axes: the ``u = (z + t)/sqrt2`` direction stretches by
``exp(eta)`` and ``v = (z - t)/sqrt2`` shrinks by ``exp(-eta)``.
Oscillator frequency and all widths are in natural units.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .lie_core import four_vector

__all__ = [
    "NORM",
    "LightCone",
    "RelativeCoordinates",
    "SqueezedState",
    "Grid2D",
    "hadron_coordinates",
    "lightcone_from_zt",
    "zt_from_lightcone",
    "boost_lightcone",
    "amplitude",
    "momentum_amplitude",
    "momentum_to_position_axes",
    "sample_grid",
    "six_sigma_window",
    "norm2",
    "grid_covariance",
    "covariance",
    "principal_axes",
    "invariant_equation_residual",
]

NORM = np.sqrt(1.0 / np.pi)
SQRT2 = np.sqrt(2.0)

# momentum (q_z, q_0) -> position-like (z, t) = (q_0, -q_z); see momentum_amplitude
momentum_to_position_axes = np.array([[0.0, 1.0], [-1.0, 0.0]])


class LightCone(NamedTuple):
    u: float
    v: float


class RelativeCoordinates(NamedTuple):
    """Hadron centre ``X`` and quark separation ``x``."""

    X: np.ndarray
    x: np.ndarray

    def quarks(self) -> tuple[np.ndarray, np.ndarray]:
        """Recover ``(x_a, x_b)``."""
        return self.X + SQRT2 * self.x, self.X - SQRT2 * self.x


def hadron_coordinates(x_a, x_b) -> RelativeCoordinates:
    """Centre ``(x_a + x_b)/2`` and separation ``(x_a - x_b)/(2 sqrt2)``."""
    x_a = four_vector(x_a)
    x_b = four_vector(x_b)
    return RelativeCoordinates((x_a + x_b) / 2.0, (x_a - x_b) / (2.0 * SQRT2))


def lightcone_from_zt(z, t) -> LightCone:
    return LightCone((z + t) / SQRT2, (z - t) / SQRT2)


def zt_from_lightcone(u, v) -> tuple:
    return (u + v) / SQRT2, (u - v) / SQRT2


def boost_lightcone(lc: LightCone, eta: float) -> LightCone:
    """Boost along ``z``: ``u -> exp(eta) u``, ``v -> exp(-eta) v``."""
    return LightCone(np.exp(eta) * lc.u, np.exp(-eta) * lc.v)


def amplitude(eta: float, z, t):
    """Squeezed ground-state wave function ``psi_eta(z, t)``.

    Vectorised over ``z`` and ``t``.  At ``eta = 0`` this is the
    circular Gaussian ``pi**-0.5 * exp(-(z**2 + t**2)/2)``.
    """
    u, v = lightcone_from_zt(np.asarray(z, dtype=float), np.asarray(t, dtype=float))
    return NORM * np.exp(-0.5 * (np.exp(-2.0 * eta) * u**2 + np.exp(2.0 * eta) * v**2))


def momentum_amplitude(eta: float, q_z, q_0):
    """Momentum-energy wave function ``phi_eta(q_z, q_0)``.

    Uses ``q_u = (q_0 - q_z)/sqrt2`` and ``q_v = (q_0 + q_z)/sqrt2``.  With
    that sign choice ``phi_eta(q_z, q_0) == psi_eta(q_0, -q_z)``, so the
    momentum density is the position density turned by a quarter turn;
    ``momentum_to_position_axes`` is the corresponding linear map.
    """
    q_z = np.asarray(q_z, dtype=float)
    q_0 = np.asarray(q_0, dtype=float)
    q_u = (q_0 - q_z) / SQRT2
    q_v = (q_0 + q_z) / SQRT2
    return NORM * np.exp(-0.5 * (np.exp(-2.0 * eta) * q_u**2 + np.exp(2.0 * eta) * q_v**2))


@dataclass(frozen=True)
class SqueezedState:
    """Ground state boosted to rapidity ``eta``."""

    eta: float

    def position(self, z, t):
        return amplitude(self.eta, z, t)

    def momentum(self, q_z, q_0):
        return momentum_amplitude(self.eta, q_z, q_0)

    def covariance(self) -> np.ndarray:
        return covariance(self.eta)


@dataclass
class Grid2D:
    """Uniform samples of a function of two variables.

    ``values[i, j]`` is the sample at ``(origin[0] + i*spacing[0],
    origin[1] + j*spacing[1])``; flattening in C order gives the row-major
    sequence used for CSV output.
    """

    origin: tuple[float, float]
    spacing: tuple[float, float]
    n: tuple[int, int]
    values: np.ndarray

    def __post_init__(self):
        if min(self.n) < 2:
            raise ValueError(f"need at least 2 points per axis, got {self.n}")
        if not min(self.spacing) > 0:
            raise ValueError(f"spacing must be positive, got {self.spacing}")
        if np.shape(self.values) != tuple(self.n):
            raise ValueError(f"values shape {np.shape(self.values)} does not match n={self.n}")

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return tuple(o + h * np.arange(m) for o, h, m in zip(self.origin, self.spacing, self.n))

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(*self.axes(), indexing="ij")


def sample_grid(
    f: Callable,
    window: tuple[Sequence[float], Sequence[float]],
    n: tuple[int, int],
) -> Grid2D:
    """Sample ``f(a1, a2)`` on a uniform grid.

    Parameters
    ----------
    f : callable
        Vectorised evaluator; scalar results are broadcast.
    window : (center, half_width)
        Each a pair, one entry per axis.
    n : (int, int)
        Points per axis, endpoints included.
    """
    center, half = window
    center = np.asarray(center, dtype=float)
    half = np.asarray(half, dtype=float)
    if center.shape != (2,) or half.shape != (2,):
        raise ValueError("window must be ((c1, c2), (h1, h2))")
    if not (np.all(np.isfinite(center)) and np.all(np.isfinite(half)) and np.all(half > 0)):
        raise ValueError(f"degenerate window: center={center.tolist()}, half_width={half.tolist()}")
    n = (int(n[0]), int(n[1]))
    if min(n) < 2:
        raise ValueError(f"need at least 2 points per axis, got {n}")
    a1 = np.linspace(center[0] - half[0], center[0] + half[0], n[0])
    a2 = np.linspace(center[1] - half[1], center[1] + half[1], n[1])
    m1, m2 = np.meshgrid(a1, a2, indexing="ij")
    values = np.broadcast_to(f(m1, m2), n).copy()
    spacing = (2.0 * half[0] / (n[0] - 1), 2.0 * half[1] / (n[1] - 1))
    return Grid2D((float(a1[0]), float(a2[0])), spacing, n, values)


def six_sigma_window(eta: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """Square window at the origin reaching six standard deviations of the
    ``z`` (and ``t``) marginal of ``|psi_eta|**2``.

    The corners then also reach beyond six standard deviations along the
    stretched light-cone axis.
    """
    half = 6.0 * np.sqrt(np.cosh(2.0 * eta) / 2.0)
    return (0.0, 0.0), (half, half)


def norm2(g: Grid2D) -> float:
    """Trapezoid-rule integral of ``|values|**2``."""
    dens = np.abs(g.values) ** 2
    inner = np.trapezoid(dens, dx=g.spacing[1], axis=1)
    return float(np.trapezoid(inner, dx=g.spacing[0]))


def grid_covariance(g: Grid2D) -> np.ndarray:
    """Second central moments of the density ``|values|**2`` by trapezoid quadrature."""
    dens = np.abs(g.values) ** 2
    a1, a2 = g.mesh()

    def integrate(h):
        return np.trapezoid(np.trapezoid(h, dx=g.spacing[1], axis=1), dx=g.spacing[0])

    mass = integrate(dens)
    m1 = integrate(a1 * dens) / mass
    m2 = integrate(a2 * dens) / mass
    d1, d2 = a1 - m1, a2 - m2
    c11 = integrate(d1 * d1 * dens) / mass
    c22 = integrate(d2 * d2 * dens) / mass
    c12 = integrate(d1 * d2 * dens) / mass
    return np.array([[c11, c12], [c12, c22]])


def covariance(eta: float) -> np.ndarray:
    """Closed-form ``(z, t)`` covariance of ``|psi_eta|**2``.

    ``Var z = Var t = cosh(2 eta)/2`` and ``Cov(z, t) = sinh(2 eta)/2``.
    """
    c = np.cosh(2.0 * eta) / 2.0
    s = np.sinh(2.0 * eta) / 2.0
    return np.array([[c, s], [s, c]])


def principal_axes(cov) -> tuple[np.ndarray, np.ndarray]:
    """Variances (descending) and angles in degrees from the first axis."""
    w, vecs = np.linalg.eigh(np.asarray(cov, dtype=float))
    order = np.argsort(w)[::-1]
    w = w[order]
    vecs = vecs[:, order]
    # fold into [0, 180) so a direction and its negative agree
    angles = np.degrees(np.arctan2(vecs[1], vecs[0])) % 180.0
    return w, angles


def invariant_equation_residual(eta: float, grid: Grid2D, eigenvalue: float = 0.0) -> float:
    """Finite-difference residual of the Lorentz-invariant oscillator equation.

    Samples ``psi_eta`` at the nodes of ``grid`` (read as ``(z, t)``;
    existing values are ignored), applies
    ``((z**2 - t**2) - (d2/dz2 - d2/dt2)) / 2`` with second-order central
    differences on the interior nodes, and returns the largest
    ``|H psi - eigenvalue * psi|``.  The squeezed ground state is an exact
    eigenfunction with eigenvalue 0, so the residual is ``O(h**2)``.

    A ``RuntimeWarning`` is emitted when either spacing exceeds 0.1.
    """
    hz, ht = grid.spacing
    if max(hz, ht) > 0.1:
        warnings.warn(
            f"grid spacing {max(hz, ht):g} > 0.1; residual is not in the asymptotic O(h^2) regime",
            RuntimeWarning,
            stacklevel=2,
        )
    if min(grid.n) < 3:
        raise ValueError("need at least one interior node per axis")
    z, t = grid.mesh()
    psi = amplitude(eta, z, t)
    core = psi[1:-1, 1:-1]
    d2z = (psi[2:, 1:-1] - 2.0 * core + psi[:-2, 1:-1]) / hz**2
    d2t = (psi[1:-1, 2:] - 2.0 * core + psi[1:-1, :-2]) / ht**2
    zi, ti = z[1:-1, 1:-1], t[1:-1, 1:-1]
    h_psi = 0.5 * ((zi**2 - ti**2) * core - (d2z - d2t))
    return float(np.abs(h_psi - eigenvalue * core).max())
