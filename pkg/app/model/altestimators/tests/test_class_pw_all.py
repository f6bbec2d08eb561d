"""Unit tests for the pre-whitened estimator."""

from __future__ import annotations

import numpy as np
import pytest

from app.model.altestimators.arma import ArmaCoefficients, arma_residuals
from app.model.altestimators.fracdiff import fracdiff
from app.model.altestimators.pw import fit_pw, fractional_css
from app.model.arfima.model import ArfimaModel
from app.model.arfima.simulate import simulate


class TestFractionalCss:
    """Test the fractional least-squares step."""

    def test_recovers_integration_order(self):
        """Test a series integrated by d = 0.3 gives d̂ near 0.3."""
        e = np.random.default_rng(15).standard_normal(1000)
        assert fractional_css(fracdiff(e, -0.3)) == pytest.approx(0.3, abs=0.06)

    def test_bounds(self):
        """Test the estimate stays in [-0.99, 0.99]."""
        y = np.cumsum(np.cumsum(np.random.default_rng(16).standard_normal(300)))
        assert -0.99 <= fractional_css(y) <= 0.99


class TestFitPw:
    """Test pre-whitening."""

    def test_no_short_memory(self):
        """Test p = q = 0 works on the demeaned series."""
        y = np.random.default_rng(17).standard_normal(500) + 3.0
        assert fit_pw(y) == pytest.approx(fractional_css(y - y.mean()), abs=1e-10)

    def test_fixed_short_memory(self):
        """Test known coefficients whiten before the fractional step."""
        y = simulate(ArfimaModel(d=0.2, ar=[-0.5]), 500, np.random.default_rng(18))
        known = ArmaCoefficients(ar=(-0.5,))
        expected = fractional_css(arma_residuals(y - y.mean(), known))
        assert fit_pw(y, fix_short=known) == pytest.approx(expected, abs=1e-12)

    def test_estimated_short_memory(self):
        """Test an ARMA(1, 0) pre-whitening produces a finite estimate."""
        y = simulate(ArfimaModel(d=0.2, ar=[-0.5]), 500, np.random.default_rng(19))
        assert np.isfinite(fit_pw(y, p=1))

    @pytest.mark.slow
    def test_fractional_noise_mean(self):
        """Test d = 0.25, n = 576 has mean estimate near 0.25."""
        model = ArfimaModel(d=0.25)
        rng = np.random.default_rng(20)
        estimates = [fit_pw(simulate(model, 576, rng)) for _ in range(500)]
        assert np.mean(estimates) == pytest.approx(0.25, abs=0.05)
