from app.model.altestimators.arma import (
    ArmaCoefficients,
    ArmaFit,
    arma_residuals,
    coefficients_to_pacf,
    fit_arma_css,
    pacf_to_coefficients,
)
from app.model.altestimators.fracdiff import fracdiff, fracdiff_weights
from app.model.altestimators.gs import GsConfig, gs_combine, gs_delta, gs_estimate
from app.model.altestimators.mle import MleParams, fit_mle, mle_profile_loglik
from app.model.altestimators.pw import fit_pw, fractional_css

__all__ = [
    "ArmaCoefficients",
    "ArmaFit",
    "GsConfig",
    "MleParams",
    "arma_residuals",
    "coefficients_to_pacf",
    "fit_arma_css",
    "fit_mle",
    "fit_pw",
    "fracdiff",
    "fracdiff_weights",
    "fractional_css",
    "gs_combine",
    "gs_delta",
    "gs_estimate",
    "mle_profile_loglik",
    "pacf_to_coefficients",
]
