from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from app.base.errors import DomainError

# |sin(λ/2)| below this is treated as λ ≡ 0 (mod 2π)
_SINGULAR = 1e-12


def _check(
    T: int,
    lam: ArrayLike,
) -> np.ndarray:
    if int(T) != T or T < 1:
        msg = f"Dirichlet kernel needs an integer length T >= 1, got {T!r}."
        raise DomainError(msg)
    values = np.asarray(lam, dtype=float)
    if not np.all(np.isfinite(values)):
        msg = f"Dirichlet kernel needs finite frequencies, got {lam!r}."
        raise DomainError(msg)
    return values


def dirichlet_kernel(
    T: int,
    lam: ArrayLike,
) -> complex | np.ndarray:
    """
    Δ^{(T)}(λ) = Σ_{t=1}^{T} e^{-iλt} = e^{-iλ(T+1)/2} sin(λT/2) / sin(λ/2).

    At λ ≡ 0 (mod 2π) the value is exactly T.
    """
    values = _check(T, lam)
    half = np.sin(values / 2.0)
    singular = np.abs(half) < _SINGULAR
    safe = np.where(singular, 1.0, half)
    regular = np.exp(-1j * values * (T + 1) / 2.0) * np.sin(values * T / 2.0) / safe
    result = np.where(singular, complex(T, 0.0), regular)
    if result.ndim == 0:
        return complex(result)
    return result


def dirichlet_kernel_abs2(
    T: int,
    lam: ArrayLike,
) -> float | np.ndarray:
    """Δ^{(T)}(λ)Δ^{(T)}(-λ) = sin²(Tλ/2)/sin²(λ/2), T² at λ ≡ 0 (mod 2π)."""
    values = _check(T, lam)
    half = np.sin(values / 2.0)
    singular = np.abs(half) < _SINGULAR
    safe = np.where(singular, 1.0, half)
    regular = (np.sin(values * T / 2.0) / safe) ** 2
    result = np.where(singular, float(T * T), regular)
    if result.ndim == 0:
        return float(result)
    return result
