"""Unit tests for the conditional-sum-of-squares ARMA fit."""

from __future__ import annotations

import numpy as np
import pytest

from app.base.errors import DomainError
from app.model.altestimators.arma import (
    ArmaCoefficients,
    arma_residuals,
    coefficients_to_pacf,
    fit_arma_css,
    pacf_to_coefficients,
)
from app.model.arfima.model import ArfimaModel
from app.model.arfima.simulate import simulate


class TestPartialAutocorrelations:
    """Test the stationarity-preserving parametrisation."""

    def test_single(self):
        """Test one partial autocorrelation r maps to φ₁ = -r."""
        assert pacf_to_coefficients([0.5]) == (-0.5,)

    def test_two(self):
        """Test (r₁, r₂) maps to (-(r₁ - r₂r₁), -r₂)."""
        phi = pacf_to_coefficients([0.5, 0.3])
        assert phi == pytest.approx((-(0.5 - 0.3 * 0.5), -0.3))

    @pytest.mark.parametrize("partials", [(0.2,), (0.9, -0.5), (-0.7, 0.4, 0.95)])
    def test_inverse_and_stationary(self, partials):
        """Test the inverse map and stationarity of the result."""
        coefficients = pacf_to_coefficients(partials)
        assert coefficients_to_pacf(coefficients) == pytest.approx(partials, abs=1e-12)
        ArfimaModel(ar=coefficients)

    def test_inverse_rejects_unit_root(self):
        """Test a non-stationary polynomial is rejected."""
        with pytest.raises(DomainError):
            coefficients_to_pacf([-1.0])


class TestArmaResiduals:
    """Test the inverse filter."""

    def test_white_noise(self):
        """Test empty coefficients return the series."""
        y = np.arange(5.0)
        np.testing.assert_array_equal(arma_residuals(y, ArmaCoefficients()), y)

    def test_ar1(self):
        """Test e_t = y_t + φ₁ y_{t-1}."""
        y = np.array([1.0, 2.0, 3.0])
        np.testing.assert_allclose(arma_residuals(y, ArmaCoefficients(ar=(-0.5,))), [1.0, 1.5, 2.0])

    def test_ma1(self):
        """Test e_t = y_t - θ₁ e_{t-1}."""
        y = np.array([1.0, 0.0, 0.0])
        np.testing.assert_allclose(arma_residuals(y, ArmaCoefficients(ma=(0.5,))), [1.0, -0.5, 0.25])


class TestFitArmaCss:
    """Test the fit."""

    def test_recovers_ar(self):
        """Test φ₁ = -0.5 is recovered from 2000 observations."""
        y = simulate(ArfimaModel(ar=[-0.5]), 2000, np.random.default_rng(4))
        fit = fit_arma_css(y, 1, 0)
        assert fit.ar[0] == pytest.approx(-0.5, abs=0.06)
        assert fit.sigma2 == pytest.approx(1.0, abs=0.1)
        assert fit.p == 1 and fit.q == 0

    def test_recovers_ma(self):
        """Test θ₁ = 0.4 is recovered from 2000 observations."""
        y = simulate(ArfimaModel(ma=[0.4]), 2000, np.random.default_rng(5))
        assert fit_arma_css(y, 0, 1).ma[0] == pytest.approx(0.4, abs=0.08)

    def test_zero_orders(self):
        """Test p = q = 0 returns the mean square."""
        y = np.array([1.0, -1.0, 2.0, -2.0])
        fit = fit_arma_css(y, 0, 0)
        assert fit.ar == () and fit.ma == ()
        assert fit.css == pytest.approx(2.5)

    def test_fit_is_valid_model(self):
        """Test fitted coefficients are stationary and invertible."""
        y = simulate(ArfimaModel(d=0.3), 500, np.random.default_rng(6))
        fit = fit_arma_css(y, 1, 1)
        ArfimaModel(ar=fit.ar, ma=fit.ma)

    def test_invalid(self):
        """Test bad orders and short series are rejected."""
        with pytest.raises(DomainError):
            fit_arma_css(np.zeros(10), -1, 0)
        with pytest.raises(DomainError) as info:
            fit_arma_css(np.zeros(3), 1, 1)
        assert info.value.diagnostics["step"] == "arma-css"
