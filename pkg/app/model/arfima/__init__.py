from app.model.arfima.autocov import autocovariances, fractional_noise_autocovariances
from app.model.arfima.levinson import DurbinLevinson, durbin_levinson
from app.model.arfima.model import ArfimaModel
from app.model.arfima.simulate import innovation_factor, simulate
from app.model.arfima.spectrum import (
    arma_spectral_factor,
    fstar_curvature_ratio,
    fstar_second_derivative_at_zero,
    spectral_density,
)

__all__ = [
    "ArfimaModel",
    "DurbinLevinson",
    "arma_spectral_factor",
    "autocovariances",
    "durbin_levinson",
    "fractional_noise_autocovariances",
    "fstar_curvature_ratio",
    "fstar_second_derivative_at_zero",
    "innovation_factor",
    "simulate",
    "spectral_density",
]
