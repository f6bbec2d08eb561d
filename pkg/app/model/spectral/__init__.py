from app.model.spectral.grid import DEFAULT_ALPHA, SpectralGrid, bandwidth
from app.model.spectral.periodogram import (
    PeriodogramSet,
    dft_direct,
    full_periodogram,
    periodogram,
)
from app.model.spectral.regressors import LprRegressors, lpr_regressors

__all__ = [
    "DEFAULT_ALPHA",
    "LprRegressors",
    "PeriodogramSet",
    "SpectralGrid",
    "bandwidth",
    "dft_direct",
    "full_periodogram",
    "lpr_regressors",
    "periodogram",
]
