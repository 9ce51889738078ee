"""Generators of the Lorentz group and closed-form group elements.

Everything here works in the component ordering ``(x, y, z, t)`` with the
metric ``diag(1, 1, 1, -1)`` and natural units.  Generators are complex
4x4 arrays ``G`` (hermitian for rotations, anti-hermitian for boosts) and
group elements are the real matrices ``exp(-i theta G)``.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "METRIC",
    "LABELS",
    "four_vector",
    "minkowski_dot",
    "minkowski_norm",
    "standard_generators",
    "n_generators",
    "generator",
    "commutator",
    "decompose",
    "combine",
    "exp_generator",
    "boost_z",
    "rotation_z",
    "apply",
    "is_lorentz",
]

METRIC = np.diag([1.0, 1.0, 1.0, -1.0])
LABELS = ("J1", "J2", "J3", "K1", "K2", "K3", "N1", "N2")

X, Y, Z, T = range(4)

# below this value of a**2 + b**2 the divided differences switch to Taylor sums
_SMALL_INVARIANT = 1e-2


def _unit(i: int, j: int) -> np.ndarray:
    m = np.zeros((4, 4), dtype=complex)
    m[i, j] = 1.0
    return m


def _build_standard():
    gens = {}
    # (J_k)_{ij} = -i eps_{kij} on the spatial block
    for k, (i, j) in zip((1, 2, 3), ((Y, Z), (Z, X), (X, Y))):
        gens[f"J{k}"] = -1j * _unit(i, j) + 1j * _unit(j, i)
    # exp(-i eta K3) is the z boost with sinh(eta) at (z, t) and (t, z)
    for k, i in zip((1, 2, 3), (X, Y, Z)):
        gens[f"K{k}"] = 1j * _unit(i, T) + 1j * _unit(T, i)
    for m in gens.values():
        m.setflags(write=False)
    return gens


_STANDARD = _build_standard()


def four_vector(x, y=None, z=None, t=None) -> np.ndarray:
    """Return a real ``(x, y, z, t)`` array.

    Accepts either four scalars or one length-4 sequence.
    """
    if y is None:
        v = np.asarray(x, dtype=float)
    else:
        v = np.array([x, y, z, t], dtype=float)
    if v.shape != (4,):
        raise ValueError(f"a four-vector needs 4 components, got shape {v.shape}")
    return v


def minkowski_dot(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3])


def minkowski_norm(v) -> float:
    """``x**2 + y**2 + z**2 - t**2``; negative for timelike vectors."""
    return minkowski_dot(v, v)


def standard_generators() -> dict[str, np.ndarray]:
    """Rotation and boost generators keyed ``"J1"`` .. ``"K3"``.

    The arrays are read-only views shared between calls; copy before
    modifying.

    Examples
    --------
    >>> g = standard_generators()
    >>> np.allclose(commutator(g["J1"], g["J2"]), 1j * g["J3"])
    True
    """
    return dict(_STANDARD)


def n_generators() -> tuple[np.ndarray, np.ndarray]:
    """Return ``(N1, N2) = (K1 - J2, K2 + J1)``.

    Together with ``J3`` they close into the algebra of the two-dimensional
    Euclidean group and annihilate the lightlike momentum ``(0, 0, w, w)``.
    """
    g = _STANDARD
    return g["K1"] - g["J2"], g["K2"] + g["J1"]


def generator(label: str) -> np.ndarray:
    """Look up one of the eight labelled generators by name."""
    if label in _STANDARD:
        return _STANDARD[label].copy()
    if label == "N1":
        return n_generators()[0]
    if label == "N2":
        return n_generators()[1]
    raise KeyError(f"unknown generator label {label!r}; expected one of {LABELS}")


def commutator(a, b) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    return a @ b - b @ a


def decompose(g, atol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Split a generator into rotation and boost coefficients.

    Parameters
    ----------
    g : array_like, shape (4, 4)
        Candidate generator.
    atol : float
        Allowed entrywise mismatch between ``g`` and its reconstruction.

    Returns
    -------
    rot, boost : ndarray, shape (3,)
        Real coefficients with ``g = sum(rot[k] J_k + boost[k] K_k)``.

    Raises
    ------
    ValueError
        If ``g`` is not a real linear combination of the six generators.
    """
    g = np.asarray(g, dtype=complex)
    if g.shape != (4, 4):
        raise ValueError(f"generator must be 4x4, got shape {g.shape}")
    a = (-1j * g)
    rot = np.array([a[Z, Y].real, a[X, Z].real, a[Y, X].real])
    boost = np.array([a[X, T].real, a[Y, T].real, a[Z, T].real])
    rebuilt = combine(rot, boost)
    scale = max(1.0, float(np.abs(g).max()))
    if np.abs(rebuilt - g).max() > atol * scale:
        raise ValueError("matrix is not a real linear combination of the Lorentz generators")
    return rot, boost


def combine(rot, boost) -> np.ndarray:
    """Inverse of :func:`decompose`."""
    g = np.zeros((4, 4), dtype=complex)
    for k in range(3):
        g += rot[k] * _STANDARD[f"J{k + 1}"] + boost[k] * _STANDARD[f"K{k + 1}"]
    return g


def _divided_differences(x1: float, x2: float) -> tuple[float, float]:
    # [f](x1, x2) for f(x) = cosh(sqrt x) and f(x) = sinh(sqrt x)/sqrt x,
    # evaluated by Taylor series; only called with |x1|, |x2| small.
    even = odd = 0.0
    h = 1.0  # complete homogeneous polynomial h_{k-1}(x1, x2)
    p2 = 1.0
    fact_even = 2.0  # (2k)!
    fact_odd = 6.0  # (2k+1)!
    for k in range(1, 30):
        even += h / fact_even
        odd += h / fact_odd
        p2 *= x2
        # h_k = x1 h_{k-1} + x2**k
        h = x1 * h + p2
        fact_even *= (2 * k + 1) * (2 * k + 2)
        fact_odd *= (2 * k + 2) * (2 * k + 3)
        if abs(h / fact_even) < 1e-18 * max(abs(even), 1e-300):
            break
    return even, odd


def _exp_algebra(a: np.ndarray, rot: np.ndarray, boost: np.ndarray) -> np.ndarray:
    # ``a`` is the real so(3,1) matrix -i*theta*G with rotation vector ``rot``
    # and boost vector ``boost`` (already multiplied by theta).  Its minimal
    # polynomial is (A^2 - alpha^2)(A^2 + beta^2), so exp(A) is cubic in A.
    p = float(boost @ boost - rot @ rot)
    q = float(boost @ rot) ** 2
    root = np.hypot(p, 2.0 * np.sqrt(q))
    if p >= 0:
        alpha2 = 0.5 * (p + root)
        beta2 = q / alpha2 if alpha2 > 0 else 0.0
    else:
        beta2 = 0.5 * (root - p)
        alpha2 = q / beta2 if beta2 > 0 else 0.0
    alpha = np.sqrt(alpha2)
    beta = np.sqrt(beta2)

    cos_b = np.cos(beta)
    sinc_b = np.sinc(beta / np.pi)
    s = alpha2 + beta2
    if s > _SMALL_INVARIANT:
        sinhc_a = np.sinh(alpha) / alpha if alpha > 0 else 1.0
        d_even = (np.cosh(alpha) - cos_b) / s
        d_odd = (sinhc_a - sinc_b) / s
    else:
        d_even, d_odd = _divided_differences(alpha2, -beta2)

    a2 = a @ a
    a3 = a2 @ a
    c0 = cos_b + beta2 * d_even
    c1 = sinc_b + beta2 * d_odd
    return c0 * np.eye(4) + c1 * a + d_even * a2 + d_odd * a3


def exp_generator(g, theta: float = 1.0) -> np.ndarray:
    """Return the group element ``exp(-i theta G)`` as a real 4x4 matrix.

    ``g`` is a generator label or any real linear combination of the
    Lorentz generators (a 4x4 array).  The exponential is evaluated in closed
    form from the two Casimir invariants of the combination: trigonometric
    for pure rotations, hyperbolic for pure boosts, a terminating quadratic
    for the nilpotent ``N1``/``N2`` span, and their mixture otherwise.

    Raises
    ------
    ValueError
        If ``g`` is not in the real span of the generators.
    """
    if isinstance(g, str):
        g = generator(g)
    rot, boost = decompose(g)
    a = np.real(-1j * theta * combine(rot, boost))
    return _exp_algebra(a, theta * rot, theta * boost)


def boost_z(eta: float) -> np.ndarray:
    """Pure boost along ``z`` with rapidity ``eta``."""
    c, s = np.cosh(eta), np.sinh(eta)
    b = np.eye(4)
    b[Z, Z] = b[T, T] = c
    b[Z, T] = b[T, Z] = s
    return b


def rotation_z(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    r = np.eye(4)
    r[X, X] = r[Y, Y] = c
    r[X, Y] = -s
    r[Y, X] = s
    return r


def apply(elem, v) -> np.ndarray:
    """Act with a group element on a four-vector (or a stack of them)."""
    return np.asarray(v, dtype=float) @ np.asarray(elem, dtype=float).T


def is_lorentz(elem, atol: float = 1e-12) -> bool:
    """True if ``elem`` preserves the metric and has unit determinant."""
    m = np.asarray(elem, dtype=float)
    return bool(
        np.abs(m.T @ METRIC @ m - METRIC).max() <= atol
        and abs(np.linalg.det(m) - 1.0) <= atol
    )

