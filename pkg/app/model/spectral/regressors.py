from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from app.model.spectral.grid import SpectralGrid


@dataclass(frozen=True)
class LprRegressors:
    """
    Regressors of the log-periodogram regression on a grid.

    Attrs:
        x: log(2 sin(λ_j/2))
        xbar: mean of x
        a: centred regressors x_j - xbar
        sxx: Σ a_j²
    """

    x: np.ndarray
    xbar: float
    a: np.ndarray
    sxx: float

    @property
    def N(self) -> int:
        return int(self.x.size)


@lru_cache(maxsize=256)
def _regressors(
    grid: SpectralGrid,
) -> LprRegressors:
    x = np.log(2.0 * np.sin(grid.lambdas / 2.0))
    xbar = float(np.mean(x))
    a = x - xbar
    for array in (x, a):
        array.setflags(write=False)
    return LprRegressors(x=x, xbar=xbar, a=a, sxx=float(np.dot(a, a)))


def lpr_regressors(
    grid: SpectralGrid,
) -> LprRegressors:
    return _regressors(grid)
