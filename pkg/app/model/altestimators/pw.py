from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize

from app.base.errors import NumericalError
from app.model.altestimators.arma import OPTIMIZER_TOL, ArmaCoefficients, arma_residuals, fit_arma_css
from app.model.altestimators.fracdiff import fracdiff

D_BOUND = 0.99


def fractional_css(
    series: ArrayLike,
) -> float:
    """argmin over d ∈ [-0.99, 0.99] of the mean square of (1-B)^d y."""
    y = np.asarray(series, dtype=float)

    def objective(d: float) -> float:
        e = fracdiff(y, d)
        return float(np.mean(e * e))

    result = optimize.minimize_scalar(
        objective,
        bounds=(-D_BOUND, D_BOUND),
        method="bounded",
        options={"xatol": OPTIMIZER_TOL},
    )
    if not result.success or not np.isfinite(result.x):
        msg = f"Fractional sum of squares minimisation failed: {result.message}"
        raise NumericalError(msg, diagnostics={"step": "fractional-css"})
    return float(result.x)


def fit_pw(
    series: ArrayLike,
    p: int = 0,
    q: int = 0,
    fix_short: ArmaCoefficients | None = None,
) -> float:
    """
    Pre-whitened estimate of d.

    The demeaned series is filtered by the inverse of an ARMA(p, q) fitted by
    conditional sum of squares (or by ``fix_short`` when the short-memory
    coefficients are known); d then minimises the sum of squared fractional
    residuals of the whitened series.
    """
    y = np.asarray(series, dtype=float)
    x = y - np.mean(y)
    coefficients = fix_short if fix_short is not None else fit_arma_css(x, p, q)
    return fractional_css(arma_residuals(x, coefficients))
