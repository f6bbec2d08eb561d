"""Unit tests for Dirichlet kernel functions."""

from __future__ import annotations

import numpy as np
import pytest

from app.base.errors import DomainError
from app.model.specfun.dirichlet import dirichlet_kernel, dirichlet_kernel_abs2


def _direct(T: int, lam: float) -> complex:
    t = np.arange(1, T + 1)
    return complex(np.sum(np.exp(-1j * lam * t)))


class TestDirichletKernel:
    """Test the complex Dirichlet kernel."""

    def test_value_at_zero_is_length(self):
        """Test the removable singularity at zero returns T exactly."""
        assert dirichlet_kernel(8, 0.0) == complex(8, 0)

    def test_value_at_two_pi_multiple(self):
        """Test frequencies congruent to zero modulo 2π return T."""
        assert dirichlet_kernel(8, 2 * np.pi) == complex(8, 0)
        assert dirichlet_kernel(5, -4 * np.pi) == complex(5, 0)

    def test_roots_of_unity_sum_to_zero(self):
        """Test a full set of roots of unity sums to zero."""
        assert abs(dirichlet_kernel(8, 2 * np.pi / 8)) < 1e-12

    @pytest.mark.parametrize("T, lam", [(4, np.pi / 3), (7, 0.31), (12, 2.9), (3, -1.2)])
    def test_matches_direct_summation(self, T, lam):
        """Test the closed form against brute-force summation."""
        assert dirichlet_kernel(T, lam) == pytest.approx(_direct(T, lam), abs=1e-12)

    def test_vectorised(self):
        """Test array input returns an array of matching shape."""
        lam = np.array([0.0, 0.5, 1.0])
        result = dirichlet_kernel(6, lam)
        assert result.shape == (3,)
        assert result[0] == complex(6, 0)
        assert result[2] == pytest.approx(_direct(6, 1.0), abs=1e-12)

    @pytest.mark.parametrize("lam", [np.nan, np.inf])
    def test_non_finite_frequency(self, lam):
        """Test non-finite frequencies raise DomainError."""
        with pytest.raises(DomainError):
            dirichlet_kernel(4, lam)

    def test_invalid_length(self):
        """Test T < 1 raises DomainError."""
        with pytest.raises(DomainError):
            dirichlet_kernel(0, 0.3)


class TestDirichletKernelAbs2:
    """Test the squared modulus of the Dirichlet kernel."""

    def test_value_at_zero(self):
        """Test T² at the removable singularity."""
        assert dirichlet_kernel_abs2(12, 0.0) == 144.0

    def test_fourier_frequency_zero(self):
        """Test zero at a non-zero Fourier frequency."""
        assert dirichlet_kernel_abs2(6, 2 * np.pi * 2 / 6) == pytest.approx(0.0, abs=1e-24)

    def test_matches_direct_summation(self):
        """Test agreement with |Σ e^{-iλt}|²."""
        assert dirichlet_kernel_abs2(5, 0.7) == pytest.approx(abs(_direct(5, 0.7)) ** 2, rel=1e-12)

    def test_even_in_frequency(self):
        """Test Δ(λ)Δ(-λ) is symmetric in λ."""
        lam = np.linspace(-3.0, 3.0, 13)
        np.testing.assert_allclose(dirichlet_kernel_abs2(9, lam), dirichlet_kernel_abs2(9, -lam), rtol=1e-13)
