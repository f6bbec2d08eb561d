from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from app.base.errors import DomainError
from app.model.arfima.model import ArfimaModel
from app.model.arfima.spectrum import fstar_curvature_ratio
from app.model.spectral.grid import DEFAULT_ALPHA, SpectralGrid
from app.model.spectral.periodogram import periodogram
from app.model.spectral.regressors import LprRegressors, lpr_regressors

# E[log(I/f)] = -C; only shifts the regression intercept
EULER_CONSTANT = float(np.euler_gamma)
# |D(λ_j)| below this fraction of ||y|| is rounding noise of an exact zero
ZERO_ORDINATE_RTOL = 64.0 * np.finfo(float).eps
# Leading bias constant of the regression, -2π²/9
BIAS_CONSTANT = -2.0 * np.pi**2 / 9.0


@dataclass(frozen=True)
class LprEstimate:
    d: float
    N: int

    def __float__(self) -> float:
        return self.d


def lpr_slope(
    log_periodogram: ArrayLike,
    regressors: LprRegressors,
) -> float:
    """d̂ = -0.5 Σ a_j z_j / S_xx for z_j = log I(λ_j)."""
    z = np.asarray(log_periodogram, dtype=float)
    if z.shape != regressors.a.shape:
        msg = f"Expected {regressors.N} log-periodogram ordinates, got shape {z.shape}."
        raise DomainError(msg)
    return float(-0.5 * np.dot(regressors.a, z) / regressors.sxx)


def lpr_estimate(
    series: ArrayLike,
    alpha: float = DEFAULT_ALPHA,
    N: int | None = None,
) -> LprEstimate:
    """
    Log-periodogram regression estimate of d.

    Uses N = ⌊n^α⌋ frequencies unless N is given. The estimate is not
    clamped to (-0.5, 0.5).

    Example:
    ```python
        result = lpr_estimate(y, alpha=0.65)
        result.d, result.N
    ```
    """
    y = np.asarray(series, dtype=float)
    if y.ndim != 1 or y.size < 4:
        msg = f"lpr_estimate needs a series of length >= 4, got shape {y.shape}."
        raise DomainError(msg)
    grid = SpectralGrid(y.size, alpha) if N is None else SpectralGrid.from_bandwidth(y.size, N)
    values = periodogram(y, grid).values
    floor = ZERO_ORDINATE_RTOL**2 * float(np.dot(y, y)) / (2.0 * np.pi)
    zeros = np.flatnonzero(values <= floor)
    if zeros.size:
        msg = f"zero periodogram ordinate at j = {int(zeros[0]) + 1}; the series is degenerate."
        raise DomainError(msg, diagnostics={"ordinate": int(zeros[0]) + 1, "n": y.size, "bandwidth": grid.N})
    return LprEstimate(d=lpr_slope(np.log(values), lpr_regressors(grid)), N=grid.N)


def lpr_theoretical_variance(
    N: int,
) -> float:
    """π²/(24N)."""
    if N < 1:
        msg = f"Bandwidth must be >= 1, got {N!r}."
        raise DomainError(msg)
    return float(np.pi**2 / (24.0 * N))


def lpr_theoretical_bias(
    model: ArfimaModel,
    n: int,
    N: int,
) -> float:
    """Leading bias -(2π²/9)(f*''(0)/f*(0))(N²/n²)."""
    return float(BIAS_CONSTANT * fstar_curvature_ratio(model) * (N / n) ** 2)
