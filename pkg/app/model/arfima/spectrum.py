from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from app.base.errors import DomainError
from app.model.arfima.model import ArfimaModel

# Step of the fourth-order central difference for f*''(0)
FD_STEP = 1e-3


def _polynomial_abs2(
    coefficients: tuple[float, ...],
    lam: np.ndarray,
) -> np.ndarray:
    z = np.exp(-1j * lam)
    return np.abs(np.polynomial.polynomial.polyval(z, (1.0,) + coefficients)) ** 2


def arma_spectral_factor(
    model: ArfimaModel,
    lam: ArrayLike,
) -> float | np.ndarray:
    """
    Short-memory factor f*(λ) = (σ²/2π)|Θ(e^{-iλ})|²/|Φ(e^{-iλ})|².

    Not renormalised to ∫log f* = 0: every consumer uses f*''(0)/f*(0) or
    f(λ)/f(μ), both invariant to a constant factor.
    """
    values = np.asarray(lam, dtype=float)
    result = model.sigma2 / (2.0 * np.pi) * _polynomial_abs2(model.ma, values) / _polynomial_abs2(model.ar, values)
    if result.ndim == 0:
        return float(result)
    return result


def spectral_density(
    model: ArfimaModel,
    lam: ArrayLike,
) -> float | np.ndarray:
    """f(λ) = |2 sin(λ/2)|^{-2d} f*(λ) for 0 < |λ| ≤ π."""
    values = np.asarray(lam, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(np.abs(values) > np.pi):
        msg = f"Spectral density is evaluated on [-π, π] only, got {lam!r}."
        raise DomainError(msg)
    if model.d > 0.0 and np.any(values == 0.0):
        msg = f"Spectral density has a pole at λ = 0 for d = {model.d} > 0."
        raise DomainError(msg)
    with np.errstate(divide="ignore"):
        long_memory = np.abs(2.0 * np.sin(values / 2.0)) ** (-2.0 * model.d)
    result = long_memory * arma_spectral_factor(model, values)
    if np.ndim(result) == 0:
        return float(result)
    return result


def fstar_second_derivative_at_zero(
    model: ArfimaModel,
    frequency_scale: float = 1.0,
    step: float = FD_STEP,
) -> float:
    """
    f*''(0) by a fourth-order central difference on the even function f*.

    ``frequency_scale`` evaluates g(λ) = f*(sλ), whose curvature at zero is
    s² f*''(0); a sub-sample of every m-th observation has s = m.
    """
    nodes = np.array([0.0, step, 2.0 * step]) * frequency_scale
    f0, f1, f2 = np.asarray(arma_spectral_factor(model, nodes))
    return float((-2.0 * f2 + 32.0 * f1 - 30.0 * f0) / (12.0 * step**2))


def fstar_curvature_ratio(
    model: ArfimaModel,
) -> float:
    """f*''(0)/f*(0), the only model quantity in the leading LPR bias."""
    return fstar_second_derivative_at_zero(model) / float(arma_spectral_factor(model, 0.0))
