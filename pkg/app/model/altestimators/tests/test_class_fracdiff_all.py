"""Unit tests for fractional differencing."""

from __future__ import annotations

import numpy as np
import pytest

from app.base.errors import DomainError
from app.model.altestimators.fracdiff import fracdiff, fracdiff_weights


class TestFracdiffWeights:
    """Test binomial coefficients of (1-B)^d."""

    def test_values(self):
        """Test d = 0.4."""
        np.testing.assert_allclose(fracdiff_weights(0.4, 4), [1.0, -0.4, -0.12, -0.064], atol=1e-15)

    def test_integer_orders(self):
        """Test d = 0 and d = 1 give finite filters."""
        np.testing.assert_array_equal(fracdiff_weights(0.0, 4), [1.0, 0.0, 0.0, 0.0])
        np.testing.assert_allclose(fracdiff_weights(1.0, 4), [1.0, -1.0, 0.0, 0.0], atol=1e-15)

    def test_invalid_length(self):
        """Test a non-positive length is rejected."""
        with pytest.raises(DomainError):
            fracdiff_weights(0.2, 0)


class TestFracdiff:
    """Test the filter on series."""

    def test_identity(self):
        """Test d = 0 returns the series."""
        y = np.random.default_rng(0).standard_normal(50)
        np.testing.assert_allclose(fracdiff(y, 0.0), y, atol=1e-15)

    def test_first_difference(self):
        """Test d = 1 differences with the first value kept."""
        y = np.array([1.0, 4.0, 9.0, 16.0])
        np.testing.assert_allclose(fracdiff(y, 1.0), [1.0, 3.0, 5.0, 7.0], atol=1e-14)

    def test_inverse(self):
        """Test differencing by -d undoes differencing by d."""
        y = np.random.default_rng(1).standard_normal(200)
        np.testing.assert_allclose(fracdiff(fracdiff(y, 0.3), -0.3), y, atol=1e-10)

    def test_invalid(self):
        """Test empty and non-finite input is rejected."""
        with pytest.raises(DomainError):
            fracdiff([], 0.2)
        with pytest.raises(DomainError):
            fracdiff([1.0, np.nan], 0.2)
        with pytest.raises(DomainError):
            fracdiff([1.0, 2.0], np.inf)
