from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize, signal

from app.base.errors import DomainError, NumericalError

# Box for partial autocorrelations; keeps fitted roots off the unit circle
PACF_BOUND = 0.99
OPTIMIZER_TOL = 1e-8


@dataclass(frozen=True)
class ArmaCoefficients:
    """
    AR and MA coefficients in the (1 + φB), (1 + θB) convention.

    Attrs:
        ar: φ₁..φ_p
        ma: θ₁..θ_q
    """

    ar: tuple[float, ...] = ()
    ma: tuple[float, ...] = ()

    @property
    def p(self) -> int:
        return len(self.ar)

    @property
    def q(self) -> int:
        return len(self.ma)


@dataclass(frozen=True)
class ArmaFit(ArmaCoefficients):
    sigma2: float = 1.0
    css: float = float("nan")
    diagnostics: dict[str, Any] = field(default_factory=dict, compare=False)


def pacf_to_coefficients(
    partials: Sequence[float],
) -> tuple[float, ...]:
    """
    Map partial autocorrelations in (-1, 1) to polynomial coefficients.

    The Durbin-Levinson step a_j ← a_j - r_k a_{k-j} builds a stationary
    y_t = Σ a_j y_{t-j} + e_t; the returned coefficients are -a, i.e. the
    polynomial 1 - Σ a_j B^j has every root outside the unit circle.
    """
    a = np.zeros(0)
    for r in np.asarray(partials, dtype=float):
        a = np.concatenate([a - r * a[::-1], [r]])
    return tuple(float(c) for c in -a)


def coefficients_to_pacf(
    coefficients: Sequence[float],
) -> tuple[float, ...]:
    """Inverse of ``pacf_to_coefficients`` for a stationary polynomial."""
    a = -np.asarray(coefficients, dtype=float)
    partials = []
    while a.size:
        r = a[-1]
        if abs(r) >= 1.0:
            msg = f"Polynomial {tuple(coefficients)!r} is not stationary."
            raise DomainError(msg)
        partials.append(float(r))
        a = (a[:-1] + r * a[:-1][::-1]) / (1.0 - r * r)
    return tuple(reversed(partials))


def arma_residuals(
    series: ArrayLike,
    coefficients: ArmaCoefficients,
) -> np.ndarray:
    """e = Φ(B)/Θ(B) y, started from zero initial conditions."""
    y = np.asarray(series, dtype=float)
    return signal.lfilter((1.0,) + tuple(coefficients.ar), (1.0,) + tuple(coefficients.ma), y)


def _unpack(
    params: np.ndarray,
    p: int,
) -> ArmaCoefficients:
    return ArmaCoefficients(ar=pacf_to_coefficients(params[:p]), ma=pacf_to_coefficients(params[p:]))


def fit_arma_css(
    series: ArrayLike,
    p: int,
    q: int,
) -> ArmaFit:
    """
    Conditional-sum-of-squares ARMA(p, q) fit.

    Minimises the mean squared residual after the first p observations over
    partial autocorrelations in [-0.99, 0.99] with bounded Powell search from
    zero, so every fit is stationary and invertible.

    Example:
    ```python
        fit = fit_arma_css(x, p=1, q=0)
        fit.ar, fit.sigma2
    ```
    """
    y = np.asarray(series, dtype=float)
    if int(p) != p or int(q) != q or p < 0 or q < 0:
        msg = f"ARMA orders must be non-negative integers, got p={p!r}, q={q!r}."
        raise DomainError(msg)
    if y.ndim != 1 or y.size < p + q + 2 or not np.all(np.isfinite(y)):
        msg = f"ARMA({p},{q}) fit needs a finite series of length >= {p + q + 2}."
        raise DomainError(msg, diagnostics={"step": "arma-css", "length": int(y.size)})
    p, q = int(p), int(q)

    def objective(params: np.ndarray) -> float:
        e = arma_residuals(y, _unpack(params, p))[p:]
        value = float(np.mean(e * e))
        return value if np.isfinite(value) else 1e100

    if p + q == 0:
        css = objective(np.zeros(0))
        return ArmaFit(sigma2=css, css=css)
    result = optimize.minimize(
        objective,
        x0=np.zeros(p + q),
        method="Powell",
        bounds=[(-PACF_BOUND, PACF_BOUND)] * (p + q),
        options={"xtol": OPTIMIZER_TOL, "ftol": OPTIMIZER_TOL},
    )
    if not np.isfinite(result.fun) or result.fun >= 1e100:
        msg = f"ARMA({p},{q}) conditional sum of squares fit failed: {result.message}"
        raise NumericalError(msg, diagnostics={"step": "arma-css", "p": p, "q": q, "nfev": int(result.nfev)})
    coefficients = _unpack(np.asarray(result.x, dtype=float), p)
    return ArmaFit(
        ar=coefficients.ar,
        ma=coefficients.ma,
        sigma2=float(result.fun),
        css=float(result.fun),
        diagnostics={"nfev": int(result.nfev), "success": bool(result.success)},
    )
