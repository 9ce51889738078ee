import numpy as np
import pytest

from littlegroup import lie_core


@pytest.fixture(scope="session")
def gens():
    g = lie_core.standard_generators()
    g["N1"], g["N2"] = lie_core.n_generators()
    return g


@pytest.fixture
def rng():
    return np.random.default_rng(20011)


def series_exp(a, terms=20):
    """Scaling-and-squaring around a truncated Taylor series of ``exp(a)``."""
    a = np.asarray(a, dtype=complex)
    norm = np.abs(a).sum(axis=1).max()
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5))) if norm > 0.5 else 0)
    b = a / 2.0**squarings
    out = np.eye(4, dtype=complex)
    term = np.eye(4, dtype=complex)
    for k in range(1, terms):
        term = term @ b / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out
