import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from littlegroup import oscillator
from littlegroup.parton import (
    PROTON_MASS_GEV,
    interaction_ratio,
    longitudinal_momentum_distribution,
    parton_report,
    period_dilation,
    rapidity_from_energy,
)


def test_rapidity_examples():
    assert rapidity_from_energy(3.0, 3.0) == 0.0
    assert rapidity_from_energy(2.0 * math.cosh(1.0), 2.0) == pytest.approx(1.0, rel=1e-12)
    eta = rapidity_from_energy(900.0, 0.938)
    assert eta == pytest.approx(7.5596, abs=1e-4)
    assert eta == pytest.approx(math.log(2 * 900 / 0.938), abs=1e-6)


@pytest.mark.parametrize("energy,mass", [(0.5, 1.0), (1.0, 0.0), (1.0, -1.0), (math.inf, 1.0), (math.nan, 1.0)])
def test_rapidity_rejects(energy, mass):
    with pytest.raises(ValueError):
        rapidity_from_energy(energy, mass)


def test_dilation_and_ratio_examples():
    assert period_dilation(0.0) == 1.0
    assert period_dilation(math.log(2.0)) == pytest.approx(2.0, rel=1e-15)
    gamma = 900 / 0.938
    assert period_dilation(rapidity_from_energy(900, 0.938)) == pytest.approx(gamma + math.sqrt(gamma**2 - 1), rel=1e-12)
    assert period_dilation(7.5596) == pytest.approx(1919, rel=1e-3)
    assert interaction_ratio(0.0) == 1.0
    assert interaction_ratio(1.0) == pytest.approx(0.1353, abs=1e-4)
    ratio = interaction_ratio(rapidity_from_energy(900, 0.938))
    assert ratio == pytest.approx(2.7e-7, rel=0.01)
    assert 1e-7 <= ratio <= 1e-6


@given(st.floats(0, 20), st.floats(1e-6, 5))
def test_monotonicity(lo, step):
    hi = lo + step
    assert interaction_ratio(hi) < interaction_ratio(lo)
    assert period_dilation(hi) > period_dilation(lo)


@given(st.one_of(st.just(0.0), st.floats(1e-12, 30)))
def test_ratio_in_unit_interval(eta):
    r = interaction_ratio(eta)
    assert 0 < r <= 1
    assert (r == 1) == (eta == 0)
    assert period_dilation(eta) * r == pytest.approx(math.exp(-eta), rel=1e-12)


def test_momentum_distribution_rest_is_gaussian():
    q = np.linspace(-4, 4, 33)
    got = longitudinal_momentum_distribution(0.0, q)
    assert np.allclose(got, np.exp(-q * q) / np.sqrt(np.pi), rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize("eta", [0.0, 0.7, 2.0])
def test_momentum_distribution_against_scipy(eta):
    for qz in (-3.0, 0.0, 1.2, 5.0):
        want, _ = integrate.quad(lambda q0: oscillator.momentum_amplitude(eta, qz, q0) ** 2, -np.inf, np.inf)
        got = longitudinal_momentum_distribution(eta, [qz])[0]
        assert got == pytest.approx(want, rel=1e-9, abs=1e-15)


@pytest.mark.parametrize("eta", [0.0, 1.0, 2.0])
def test_momentum_distribution_moments(eta):
    sd = math.sqrt(math.cosh(2 * eta) / 2)
    q = np.linspace(-6 * sd, 6 * sd, 2001)
    p = longitudinal_momentum_distribution(eta, q)
    assert np.trapezoid(p, q) == pytest.approx(1.0, abs=1e-4)
    var = np.trapezoid(q * q * p, q)
    assert var == pytest.approx(math.cosh(2 * eta) / 2, rel=1e-3)
    assert np.allclose(p, p[::-1], rtol=1e-12)
    if eta == 2.0:
        assert var == pytest.approx(13.65, abs=0.01)


def test_momentum_distribution_rejects_nan():
    with pytest.raises(ValueError):
        longitudinal_momentum_distribution(1.0, [0.0, np.nan])


def test_report_at_fermilab_energy():
    r = parton_report(900.0, PROTON_MASS_GEV)
    assert r.mass == 0.938
    assert r.gamma == pytest.approx(959.488, rel=1e-6)
    assert r.interaction_ratio == pytest.approx(2.7e-7, rel=0.01)
    assert r.period_dilation * r.interaction_ratio == pytest.approx(math.exp(-r.eta), rel=1e-12)


def test_report_at_rest():
    r = parton_report(0.938, 0.938)
    assert (r.eta, r.gamma, r.period_dilation, r.interaction_ratio) == (0.0, 1.0, 1.0, 1.0)
    assert r.spatial_width == pytest.approx(math.sqrt(0.5), rel=1e-15)
    assert r.momentum_width == pytest.approx(math.sqrt(0.5), rel=1e-15)


def test_report_width_ratio():
    m = 1.0
    w2 = parton_report(m * math.cosh(2.0), m)
    w0 = parton_report(m, m)
    assert w2.spatial_width / w0.spatial_width == pytest.approx(math.sqrt(math.cosh(4.0)), rel=1e-12)
    assert w2.spatial_width / w0.spatial_width == pytest.approx(5.22, abs=0.01)
    assert w2.momentum_width / w0.momentum_width == pytest.approx(math.sqrt(math.cosh(4.0)), rel=1e-12)


def test_widths_match_covariance_and_grow_together():
    prev = None
    for eta in np.linspace(0, 5, 26):
        r = parton_report(math.cosh(eta), 1.0)
        cov = oscillator.covariance(r.eta)
        assert r.spatial_width == pytest.approx(math.sqrt(cov[0, 0]), rel=1e-12)
        assert r.momentum_width == pytest.approx(math.sqrt(cov[1, 1]), rel=1e-12)
        product = r.spatial_width * r.momentum_width
        assert product == pytest.approx(math.cosh(2 * r.eta) / 2, rel=1e-9)
        if prev is not None:
            assert r.spatial_width > prev.spatial_width and r.momentum_width > prev.momentum_width
        prev = r


def test_report_propagates_errors():
    with pytest.raises(ValueError):
        parton_report(0.5, 1.0)
