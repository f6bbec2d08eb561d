"""Unit tests for quadrature autocovariances."""

from __future__ import annotations

import numpy as np
import pytest
from scipy import linalg, special

from app.base.errors import DomainError
from app.model.arfima.autocov import autocovariances, fractional_noise_autocovariances
from app.model.arfima.model import ArfimaModel


def _fractional_noise(d: float, max_lag: int) -> np.ndarray:
    gamma0 = special.gamma(1 - 2 * d) / special.gamma(1 - d) ** 2
    k = np.arange(1, max_lag + 1)
    ratios = np.cumprod((k - 1 + d) / (k - d))
    return gamma0 * np.concatenate([[1.0], ratios])


class TestAutocovariances:
    """Test autocovariances against closed forms."""

    def test_white_noise(self):
        """Test iid noise has γ_0 = 1 and zero higher lags."""
        gamma = autocovariances(ArfimaModel(), 5)
        assert gamma[0] == pytest.approx(1.0, rel=1e-10)
        np.testing.assert_allclose(gamma[1:], 0.0, atol=1e-9)

    @pytest.mark.parametrize("d", [0.25, 0.45, -0.25])
    def test_fractional_noise(self, d):
        """Test ARFIMA(0,d,0) against Γ(1-2d)/Γ(1-d)² and its lag recursion."""
        gamma = autocovariances(ArfimaModel(d=d), 60)
        expected = _fractional_noise(d, 60)
        assert gamma[0] == pytest.approx(expected[0], rel=1e-9)
        np.testing.assert_allclose(gamma, expected, rtol=0, atol=1e-9 * expected[0])

    def test_ar1(self):
        """Test AR coefficient a = -φ₁ = 0.4 against a^k/(1-a²)."""
        a = 0.4
        gamma = autocovariances(ArfimaModel(ar=[-a]), 10)
        expected = a ** np.arange(11) / (1 - a * a)
        np.testing.assert_allclose(gamma, expected, rtol=0, atol=1e-8)

    def test_ma1(self):
        """Test MA(1) has two non-zero lags."""
        gamma = autocovariances(ArfimaModel(ma=[0.5]), 4)
        np.testing.assert_allclose(gamma, [1.25, 0.5, 0.0, 0.0, 0.0], atol=1e-8)

    def test_arma11(self):
        """Test ARMA(1,1) closed form."""
        a, b = 0.9, -0.4
        gamma = autocovariances(ArfimaModel(ar=[-a], ma=[b]), 8)
        g0 = (1 + 2 * a * b + b * b) / (1 - a * a)
        g1 = (1 + a * b) * (a + b) / (1 - a * a)
        expected = np.concatenate([[g0], g1 * a ** np.arange(8)])
        np.testing.assert_allclose(gamma, expected, rtol=0, atol=1e-8)

    @pytest.mark.parametrize(
        "model",
        [
            ArfimaModel(d=0.45, ar=[-0.9]),
            ArfimaModel(d=0.45, ma=[0.9]),
            ArfimaModel(d=-0.25, ar=[0.9]),
            ArfimaModel(d=0.25, ar=[0.4], ma=[-0.4]),
        ],
    )
    def test_toeplitz_positive_definite(self, model):
        """Test the 65×65 Toeplitz matrix admits a Cholesky factor."""
        gamma = autocovariances(model, 64)
        linalg.cholesky(linalg.toeplitz(gamma), lower=True)

    def test_cached_and_read_only(self):
        """Test repeated calls share one read-only array."""
        model = ArfimaModel(d=0.1)
        first = autocovariances(model, 3)
        assert autocovariances(ArfimaModel(d=0.1), 3) is first
        with pytest.raises(ValueError):
            first[0] = 0.0

    def test_negative_lag(self):
        """Test negative max_lag is a domain error."""
        with pytest.raises(DomainError):
            autocovariances(ArfimaModel(), -1)


class TestConvolutionAutocovariances:
    """Test the ψ-weight convolution path against quadrature."""

    @pytest.mark.parametrize(
        "model",
        [
            ArfimaModel(d=0.3, ar=[-0.5]),
            ArfimaModel(d=0.25, ma=[0.4]),
            ArfimaModel(d=-0.25, ar=[0.9]),
            ArfimaModel(d=0.45, ar=[-0.4], ma=[0.4], sigma2=2.0),
        ],
    )
    def test_matches_quadrature(self, model):
        """Test both methods agree to 1e-8·γ_0."""
        quad = autocovariances(model, 40)
        conv = autocovariances(model, 40, method="convolution")
        np.testing.assert_allclose(conv, quad, rtol=0, atol=1e-8 * quad[0])

    def test_fractional_noise_closed_form(self):
        """Test p = q = 0 reduces to the closed form."""
        conv = autocovariances(ArfimaModel(d=0.25), 30, method="convolution")
        np.testing.assert_allclose(conv, _fractional_noise(0.25, 30), rtol=1e-12)
        np.testing.assert_allclose(fractional_noise_autocovariances(0.25, 30), _fractional_noise(0.25, 30), rtol=1e-12)

    def test_ar1_closed_form(self):
        """Test d = 0 reduces to the AR(1) autocovariances."""
        conv = autocovariances(ArfimaModel(ar=[-0.9]), 20, method="convolution")
        np.testing.assert_allclose(conv, 0.9 ** np.arange(21) / (1 - 0.81), rtol=1e-10)

    def test_unknown_method(self):
        """Test an unknown method name is rejected."""
        with pytest.raises(DomainError):
            autocovariances(ArfimaModel(), 3, method="spline")
