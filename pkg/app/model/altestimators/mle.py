from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize

from app.base.errors import DomainError, JackLprError, NumericalError
from app.model.altestimators.arma import (
    OPTIMIZER_TOL,
    PACF_BOUND,
    ArmaCoefficients,
    pacf_to_coefficients,
)
from app.model.arfima.autocov import autocovariances
from app.model.arfima.levinson import durbin_levinson
from app.model.arfima.model import ArfimaModel

D_BOUND = 0.499
D_STARTS = (-0.3, 0.0, 0.3)
# Objective value for parameters where the likelihood cannot be evaluated
_PENALTY = 1e100


@dataclass(frozen=True)
class MleParams:
    """
    η = (d, φ, θ) of a unit-variance ARFIMA model.

    Attrs:
        d: memory parameter
        ar: φ coefficients
        ma: θ coefficients
        loglik: profile log-likelihood at η when produced by fit_mle
    """

    d: float
    ar: tuple[float, ...] = ()
    ma: tuple[float, ...] = ()
    loglik: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "ar", tuple(float(c) for c in self.ar))
        object.__setattr__(self, "ma", tuple(float(c) for c in self.ma))
        self.to_model()

    def to_model(self) -> ArfimaModel:
        return ArfimaModel(d=self.d, ar=self.ar, ma=self.ma)

    def describe(self) -> dict[str, Any]:
        return {"d": self.d, "phi": list(self.ar), "theta": list(self.ma), "loglik": self.loglik}


def mle_profile_loglik(
    series: ArrayLike,
    params: MleParams,
) -> float:
    """
    L(η) = -(n/2) log[(y - μ̂1)'Σ⁻¹(y - μ̂1)] - (1/2) log|Σ|.

    Σ is the unit-variance autocovariance matrix of η, factorised by
    Durbin-Levinson; μ̂ = 1'Σ⁻¹y / 1'Σ⁻¹1.
    """
    y = np.asarray(series, dtype=float)
    n = y.size
    if y.ndim != 1 or n < len(params.ar) + len(params.ma) + 2:
        msg = f"Profile likelihood needs a series of length >= p + q + 2, got shape {y.shape}."
        raise DomainError(msg)
    factor = durbin_levinson(autocovariances(params.to_model(), n - 1, method="convolution"))
    e_y = factor.innovations(y)
    e_1 = factor.innovations(np.ones(n))
    mu = float(np.sum(e_1 * e_y / factor.variances) / np.sum(e_1 * e_1 / factor.variances))
    quadratic = factor.quadratic_form(y - mu)
    if not quadratic > 0.0:
        msg = "Profile likelihood quadratic form is not positive."
        raise NumericalError(msg, diagnostics={"quadratic_form": quadratic})
    return float(-0.5 * n * np.log(quadratic) - 0.5 * factor.log_det())


def _params(
    x: np.ndarray,
    p: int,
    fixed: ArmaCoefficients | None,
) -> MleParams:
    if fixed is not None:
        return MleParams(d=float(x[0]), ar=fixed.ar, ma=fixed.ma)
    return MleParams(d=float(x[0]), ar=pacf_to_coefficients(x[1 : 1 + p]), ma=pacf_to_coefficients(x[1 + p :]))


def fit_mle(
    series: ArrayLike,
    p: int = 0,
    q: int = 0,
    fix_short: ArmaCoefficients | None = None,
) -> MleParams:
    """
    Maximise the profile likelihood over d ∈ [-0.499, 0.499] and, unless
    ``fix_short`` is given, ARMA(p, q) partial autocorrelations in
    [-0.99, 0.99].

    Bounded Powell searches start from d ∈ {-0.3, 0, 0.3} with zero short-memory
    parameters; the best of the three is returned.

    Example:
    ```python
        params = fit_mle(y, p=1, q=0)
        known = fit_mle(y, fix_short=ArmaCoefficients(ar=(0.9,)))
    ```
    """
    y = np.asarray(series, dtype=float)
    if fix_short is not None:
        p, q = fix_short.p, fix_short.q
        ArfimaModel(ar=fix_short.ar, ma=fix_short.ma)
    if int(p) != p or int(q) != q or p < 0 or q < 0:
        msg = f"ARMA orders must be non-negative integers, got p={p!r}, q={q!r}."
        raise DomainError(msg)
    free = 0 if fix_short is not None else p + q
    bounds = [(-D_BOUND, D_BOUND)] + [(-PACF_BOUND, PACF_BOUND)] * free

    def objective(x: np.ndarray) -> float:
        try:
            value = -mle_profile_loglik(y, _params(x, p, fix_short))
        except JackLprError:
            return _PENALTY
        return value if np.isfinite(value) else _PENALTY

    best = None
    attempts = []
    for start in D_STARTS:
        x0 = np.concatenate([[start], np.zeros(free)])
        result = optimize.minimize(
            objective,
            x0=x0,
            method="Powell",
            bounds=bounds,
            options={"xtol": OPTIMIZER_TOL, "ftol": OPTIMIZER_TOL},
        )
        attempts.append({"start": start, "fun": float(result.fun), "success": bool(result.success)})
        if result.fun < _PENALTY and (best is None or result.fun < best.fun):
            best = result
    if best is None:
        msg = f"Profile likelihood maximisation failed from every start for ARFIMA({p},d,{q})."
        raise NumericalError(msg, diagnostics={"attempts": attempts})
    params = _params(np.asarray(best.x, dtype=float), p, fix_short)
    return MleParams(d=params.d, ar=params.ar, ma=params.ma, loglik=-float(best.fun))
