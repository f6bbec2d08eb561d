from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike

from app.base.errors import DomainError
from app.model.spectral.grid import SpectralGrid

PeriodogramMethod = Literal["auto", "fft", "direct"]

# The O(nN) direct sum is only a validation path
DIRECT_MAX_N = 256


@dataclass(frozen=True)
class PeriodogramSet:
    """Periodogram ordinates I(λ_j), j = 1..N, on a grid."""

    values: np.ndarray
    grid: SpectralGrid

    def __post_init__(self) -> None:
        if self.values.shape != (self.grid.N,):
            msg = f"PeriodogramSet expects {self.grid.N} ordinates, got shape {self.values.shape}."
            raise DomainError(msg)
        if np.any(self.values < 0.0):
            msg = "Periodogram ordinates must be non-negative."
            raise DomainError(msg)
        self.values.setflags(write=False)


def _series(
    series: ArrayLike,
) -> np.ndarray:
    y = np.asarray(series, dtype=float)
    if y.ndim != 1 or not np.all(np.isfinite(y)):
        msg = "Series must be a one-dimensional array of finite values."
        raise DomainError(msg)
    return y


def dft_direct(
    series: ArrayLike,
    lambdas: ArrayLike,
) -> np.ndarray:
    """D(λ) = (2πn)^{-1/2} Σ_{t=1}^{n} y_t e^{-iλt} by direct summation."""
    y = _series(series)
    t = np.arange(1, y.size + 1)
    phases = np.exp(-1j * np.outer(np.asarray(lambdas, dtype=float), t))
    return phases @ y / np.sqrt(2.0 * np.pi * y.size)


def full_periodogram(
    series: ArrayLike,
) -> np.ndarray:
    """I(2πj/n) for every j = 1..n-1."""
    y = _series(series)
    return np.abs(np.fft.fft(y)[1:]) ** 2 / (2.0 * np.pi * y.size)


def periodogram(
    series: ArrayLike,
    grid: SpectralGrid,
    method: PeriodogramMethod = "auto",
) -> PeriodogramSet:
    """
    I(λ_j) = |D(λ_j)|² for the N low Fourier frequencies of ``grid``.

    The series is used as given: at j >= 1 a constant mean contributes
    nothing. ``method="direct"`` is allowed for n < 256 only.
    """
    y = _series(series)
    if y.size != grid.n:
        msg = f"Series length {y.size} does not match grid length {grid.n}."
        raise DomainError(msg, diagnostics={"length": y.size, "n": grid.n})
    if method == "direct":
        if grid.n >= DIRECT_MAX_N:
            msg = f"Direct periodogram is a validation path for n < {DIRECT_MAX_N}, got n = {grid.n}."
            raise DomainError(msg)
        values = np.abs(dft_direct(y, grid.lambdas)) ** 2
    elif method in ("auto", "fft"):
        values = np.abs(np.fft.fft(y)[1 : grid.N + 1]) ** 2 / (2.0 * np.pi * grid.n)
    else:
        msg = f"Unknown periodogram method {method!r}."
        raise DomainError(msg)
    return PeriodogramSet(values=values, grid=grid)
