from __future__ import annotations

from functools import lru_cache
from typing import Callable, Literal

import numpy as np
from scipy import integrate, signal, special

from app.base.errors import DomainError, NumericalError
from app.model.arfima.model import ArfimaModel
from app.model.arfima.spectrum import arma_spectral_factor, spectral_density

AutocovarianceMethod = Literal["quadrature", "convolution"]

# Accuracy target, as a fraction of gamma_0
REL_TOL = 1e-10
# Below this frequency the λ^{-2d} pole is removed by substitution
_SPLIT = 1.0
_LIMIT = 20000
# ψ-weights are kept until they fall below this size
_PSI_TOL = 1e-20
_PSI_MAX = 100_000


def _regular_part(
    model: ArfimaModel,
    lam: float,
) -> float:
    """h(λ) = f(λ) λ^{2d}, finite and smooth at λ = 0."""
    sinc = 1.0 if lam == 0.0 else 2.0 * np.sin(lam / 2.0) / lam
    return sinc ** (-2.0 * model.d) * arma_spectral_factor(model, lam)


def _integrands(
    model: ArfimaModel,
    lags: np.ndarray,
) -> list[tuple[Callable[[float], np.ndarray], float, float]]:
    def plain(lam: float) -> np.ndarray:
        return spectral_density(model, lam) * np.cos(lags * lam)

    if model.d <= 0.0:
        return [(plain, 0.0, _SPLIT), (plain, _SPLIT, np.pi)]

    # λ = u^p, p = 1/(1-2d): the Jacobian p u^{p-1} cancels λ^{-2d}; [0, 1] maps onto itself
    power = 1.0 / (1.0 - 2.0 * model.d)

    def substituted(u: float) -> np.ndarray:
        lam = u**power
        return power * _regular_part(model, lam) * np.cos(lags * lam)

    return [(substituted, 0.0, _SPLIT), (plain, _SPLIT, np.pi)]


def _integrate(
    model: ArfimaModel,
    lags: np.ndarray,
    epsabs: float,
    epsrel: float = 0.0,
) -> tuple[np.ndarray, float, list[int]]:
    total = np.zeros(lags.size)
    error = 0.0
    statuses: list[int] = []
    for func, a, b in _integrands(model, lags):
        value, err, info = integrate.quad_vec(
            func,
            a,
            b,
            epsabs=epsabs,
            epsrel=epsrel,
            norm="max",
            limit=_LIMIT,
            full_output=True,
        )
        total += value
        error += err
        statuses.append(int(info.status))
    return total, error, statuses


@lru_cache(maxsize=64)
def _autocovariances(
    model: ArfimaModel,
    max_lag: int,
) -> np.ndarray:
    head, _, _ = _integrate(model, np.zeros(1), epsabs=0.0, epsrel=1e-12)
    gamma0 = 2.0 * float(head[0])
    # two pieces, result doubled: per-piece tolerance keeps the total within REL_TOL·γ_0
    tolerance = REL_TOL * gamma0
    lags = np.arange(max_lag + 1, dtype=float)
    values, error, statuses = _integrate(model, lags, epsabs=tolerance / 4.0)
    if 2.0 * error > tolerance:
        msg = f"Autocovariance quadrature did not converge for {model!r}."
        raise NumericalError(
            msg,
            diagnostics={"error": 2.0 * error, "tolerance": tolerance, "statuses": statuses, "max_lag": max_lag},
        )
    result = 2.0 * values
    result.setflags(write=False)
    return result


def fractional_noise_autocovariances(
    d: float,
    max_lag: int,
    sigma2: float = 1.0,
) -> np.ndarray:
    """σ²Γ(1-2d)/Γ(1-d)² at lag 0, then γ_k = γ_{k-1}(k-1+d)/(k-d)."""
    gamma0 = sigma2 * np.exp(special.gammaln(1.0 - 2.0 * d) - 2.0 * special.gammaln(1.0 - d))
    k = np.arange(1, max_lag + 1, dtype=float)
    return gamma0 * np.concatenate([[1.0], np.cumprod((k - 1.0 + d) / (k - d))])


def _psi_length(
    model: ArfimaModel,
) -> int:
    if not model.ar:
        return model.q + 1
    roots = np.polynomial.polynomial.polyroots((1.0,) + model.ar)
    decay = float(np.max(1.0 / np.abs(roots)))
    return model.q + 1 + int(np.ceil(np.log(_PSI_TOL) / np.log(decay)))


@lru_cache(maxsize=256)
def _convolved(
    model: ArfimaModel,
    max_lag: int,
) -> np.ndarray:
    length = _psi_length(model)
    if length > _PSI_MAX:
        return _autocovariances(model, max_lag)
    impulse = np.zeros(length)
    impulse[0] = 1.0
    psi = signal.lfilter((1.0,) + model.ma, (1.0,) + model.ar, impulse)
    arma = np.correlate(psi, psi, mode="full")
    lags = np.abs(np.arange(-(length - 1), max_lag + length))
    fractional = fractional_noise_autocovariances(model.d, int(lags.max()), model.sigma2)[lags]
    result = np.convolve(fractional, arma, mode="valid")
    result.setflags(write=False)
    return result


def autocovariances(
    model: ArfimaModel,
    max_lag: int,
    method: AutocovarianceMethod = "quadrature",
) -> np.ndarray:
    """
    γ_k = 2∫_0^π cos(kλ) f(λ) dλ for k = 0..max_lag.

    ``quadrature`` integrates all lags together with ``scipy.integrate.quad_vec``.
    For d > 0 the range [0, 1] is integrated in u = λ^{1-2d}, which removes the
    λ^{-2d} endpoint singularity. The absolute tolerance is 1e-10·γ_0.

    ``convolution`` convolves the fractional-noise closed form with the
    autocovariances of the ARMA ψ-weights, truncated once they drop below
    1e-20; it is the fast path for likelihood evaluation.

    Results are cached per (model, max_lag) and returned read-only.
    """
    if int(max_lag) != max_lag or max_lag < 0:
        msg = f"max_lag must be a non-negative integer, got {max_lag!r}."
        raise DomainError(msg)
    if method == "quadrature":
        return _autocovariances(model, int(max_lag))
    if method == "convolution":
        return _convolved(model, int(max_lag))
    msg = f"Unknown autocovariance method {method!r}."
    raise DomainError(msg)
