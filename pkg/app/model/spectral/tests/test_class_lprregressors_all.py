"""Unit tests for LPR regressors."""

from __future__ import annotations

import numpy as np
import pytest

from app.model.spectral.grid import SpectralGrid
from app.model.spectral.regressors import lpr_regressors


class TestLprRegressors:
    """Test x_j = log(2 sin(λ_j/2)) and its centred form."""

    def test_small_grid(self):
        """Test n = 8, N = 2 against direct evaluation."""
        reg = lpr_regressors(SpectralGrid.from_bandwidth(8, 2))
        np.testing.assert_allclose(reg.x, [np.log(2 * np.sin(np.pi / 8)), np.log(2 * np.sin(np.pi / 4))], rtol=1e-15)
        assert reg.N == 2
        assert reg.xbar == pytest.approx(reg.x.mean())

    @pytest.mark.parametrize("n", [48, 96, 576, 4096])
    def test_centred(self, n):
        """Test Σ a_j = 0 and S_xx = Σ a_j²."""
        reg = lpr_regressors(SpectralGrid(n))
        assert abs(reg.a.sum()) < 1e-10
        assert reg.sxx == pytest.approx(np.sum(reg.a**2), rel=1e-14)
        assert reg.sxx > 0

    def test_sxx_grows_like_bandwidth(self):
        """Test S_xx/N is of order one and approaches one as n grows."""
        small = lpr_regressors(SpectralGrid(576))
        large = lpr_regressors(SpectralGrid(2**16))
        assert 0.7 < small.sxx / small.N < 1.0
        assert small.sxx / small.N < large.sxx / large.N < 1.0

    def test_sub_sample_regressors(self):
        """Test a length-l grid gives x'_j = log(2 sin(mλ_j/2))."""
        full = SpectralGrid(576)
        sub = lpr_regressors(SpectralGrid(144))
        expected = np.log(2 * np.sin(4 * full.lambdas[: sub.N] / 2))
        np.testing.assert_allclose(sub.x, expected, rtol=1e-13)

    def test_cached(self):
        """Test equal grids share one regressor object."""
        assert lpr_regressors(SpectralGrid(96)) is lpr_regressors(SpectralGrid(96))
