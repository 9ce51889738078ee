"""Contraction of the boosted rotation group into the gauge group.

Dividing the boosted transverse rotation generators by ``cosh(eta)`` and
letting ``eta`` grow sends them to ``N1`` and ``N2``; the distance shrinks
like ``1 - tanh(eta) ~ 2 exp(-2 eta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .lie_core import apply, boost_z, exp_generator, n_generators, standard_generators

__all__ = [
    "CONTRACTION_SCHEME",
    "ContractionReport",
    "operator_norm",
    "boosted_rotation",
    "contracted_generator",
    "contraction_target",
    "contraction_report",
    "select_scheme",
]

Direction = Literal["conjugate", "inverse_conjugate"]

# (direction, sign) per rotation axis; frozen by ``select_scheme(8.0)``
# and guarded by a regression test.
CONTRACTION_SCHEME: dict[int, tuple[Direction, int]] = {
    2: ("conjugate", -1),  # -> N1
    1: ("conjugate", +1),  # -> N2
}

_TARGET_LABEL = {2: "N1", 1: "N2"}


def operator_norm(m) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(m), 2))


def boosted_rotation(axis: int, eta: float, direction: Direction = "conjugate") -> np.ndarray:
    """``B J_axis B^-1`` (``"conjugate"``) or ``B^-1 J_axis B`` with ``B = boost_z(eta)``."""
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    j = standard_generators()[f"J{axis}"]
    b, b_inv = boost_z(eta), boost_z(-eta)
    if direction == "conjugate":
        return b @ j @ b_inv
    if direction == "inverse_conjugate":
        return b_inv @ j @ b
    raise ValueError(f"unknown direction {direction!r}")


def contraction_target(axis: int) -> np.ndarray:
    """The gauge generator the boosted ``J_axis`` contracts to (J2 -> N1, J1 -> N2)."""
    n1, n2 = n_generators()
    if axis == 2:
        return n1
    if axis == 1:
        return n2
    raise ValueError(f"only the transverse axes 1 and 2 contract, got {axis!r}")


def contracted_generator(axis: int, eta: float) -> np.ndarray:
    """``sign / cosh(eta)`` times the boosted rotation generator ``J_axis``."""
    direction, sign = CONTRACTION_SCHEME[axis]
    return sign * boosted_rotation(axis, eta, direction) / np.cosh(eta)


def select_scheme(eta: float = 8.0) -> dict[int, tuple[Direction, int]]:
    """Pick, per axis, the (direction, sign) pair closest to its target at ``eta``."""
    scheme = {}
    for axis in (2, 1):
        target = contraction_target(axis)
        candidates = [
            (operator_norm(s * boosted_rotation(axis, eta, d) / np.cosh(eta) - target), d, s)
            for d in ("conjugate", "inverse_conjugate")
            for s in (+1, -1)
        ]
        _, d, s = min(candidates, key=lambda c: c[0])
        scheme[axis] = (d, s)
    return scheme


@dataclass
class ContractionReport:
    etas: list[float]
    deviations_n1: list[float]
    deviations_n2: list[float]
    fitted_decay_rate: float
    limit_invariance: float = field(default=0.0)

    def as_dict(self) -> dict:
        rate = self.fitted_decay_rate
        return {
            "etas": list(self.etas),
            "deviations_n1": list(self.deviations_n1),
            "deviations_n2": list(self.deviations_n2),
            "fitted_decay_rate": None if math.isnan(rate) else rate,
            "limit_invariance": self.limit_invariance,
        }


def _limit_invariance() -> float:
    # exponentiated limit generators must fix the lightlike momentum (0, 0, 1, 1)
    p = np.array([0.0, 0.0, 1.0, 1.0])
    worst = 0.0
    for axis in (1, 2):
        for theta in (-2.0, -0.5, 0.5, 2.0):
            moved = apply(exp_generator(contraction_target(axis), theta), p)
            worst = max(worst, float(np.abs(moved - p).max()))
    return worst


def contraction_report(etas: Sequence[float]) -> ContractionReport:
    """Distances to ``N1``/``N2`` along a rapidity sweep, plus the decay rate.

    The rate is the unweighted least-squares slope of ``log(deviation)``
    against ``eta`` over both axes; it is NaN for a single rapidity.

    Raises
    ------
    ValueError
        If ``etas`` is empty, contains a nonpositive value, or is not
        strictly increasing.
    """
    etas = [float(e) for e in etas]
    if not etas:
        raise ValueError("etas must be nonempty")
    if any(not (e > 0 and math.isfinite(e)) for e in etas):
        raise ValueError("etas must be positive and finite")
    if any(b <= a for a, b in zip(etas, etas[1:])):
        raise ValueError("etas must be strictly increasing")

    dev = {
        axis: [operator_norm(contracted_generator(axis, e) - contraction_target(axis)) for e in etas]
        for axis in (2, 1)
    }
    if len(etas) > 1:
        x = np.concatenate([etas, etas])
        y = np.log(np.concatenate([dev[2], dev[1]]))
        rate = float(np.polyfit(x, y, 1)[0])
    else:
        rate = math.nan
    return ContractionReport(
        etas=etas,
        deviations_n1=dev[2],
        deviations_n2=dev[1],
        fitted_decay_rate=rate,
        limit_invariance=_limit_invariance(),
    )
