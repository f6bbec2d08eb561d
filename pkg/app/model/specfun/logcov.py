from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from app.base.errors import DomainError
from app.model.specfun.gammafun import digamma, gamma_ratio_log_table


@dataclass(frozen=True)
class SeriesControl:
    """Truncation control for the log-periodogram covariance series."""

    rel_tol: float = 1e-12
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not self.rel_tol > 0.0:
            msg = f"SeriesControl.rel_tol must be > 0, got {self.rel_tol!r}."
            raise DomainError(msg)
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            msg = f"SeriesControl.max_terms must be an integer >= 1, got {self.max_terms!r}."
            raise DomainError(msg)


@dataclass(frozen=True)
class LogCovValue:
    value: float
    terms: int
    truncated: bool


@dataclass(frozen=True)
class LogCovTable:
    """Element-wise series values for an array of squared correlations."""

    values: np.ndarray
    terms: np.ndarray
    truncated: np.ndarray

    @property
    def truncated_count(self) -> int:
        return int(np.count_nonzero(self.truncated))


def _coefficients(
    terms: int,
) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(1, terms + 1, dtype=float)
    psi = digamma(0.5 + k) + digamma(0.5)
    log_weight = gamma_ratio_log_table(0.5, terms) - np.cumsum(np.log(k))
    return psi, log_weight


def log_periodogram_cov_table(
    rho2: ArrayLike,
    ctl: SeriesControl | None = None,
) -> LogCovTable:
    """
    Covariance of two log-periodogram ordinates as a function of ρ².

        (1-ρ²)^{1/2} Σ_k s_k² g_k ρ^{2k}/k!  -  (1-ρ²) (Σ_k s_k g_k ρ^{2k}/k!)²

    with s_k = Ψ(1/2+k) + Ψ(1/2) and g_k = Γ(1/2+k)/Γ(1/2), k ≥ 1.

    Each sum stops at the first term k for which the contributions of terms
    k-1 and k to both partial sums are below ``ctl.rel_tol``; rows that reach
    ``ctl.max_terms`` are flagged as truncated.

    Example:
    ```python
        table = log_periodogram_cov_table([0.0, 0.25, 0.5])
        table.values      # array([0.        , 0.4...,  ...])
        table.truncated   # array([False, False, False])
    ```
    """
    ctl = ctl or SeriesControl()
    r = np.atleast_1d(np.asarray(rho2, dtype=float))
    if not np.all(np.isfinite(r)) or np.any(r < 0.0) or np.any(r >= 1.0):
        msg = "log_periodogram_cov requires 0 <= rho2 < 1."
        raise DomainError(msg, diagnostics={"max_rho2": float(np.nanmax(r)) if r.size else None})
    shape = np.shape(rho2)
    r = r.ravel()
    psi, log_weight = _coefficients(ctl.max_terms)
    k = np.arange(1, ctl.max_terms + 1, dtype=float)

    with np.errstate(divide="ignore", invalid="ignore"):
        log_r = np.log(r)
        weights = np.exp(log_weight[None, :] + k[None, :] * log_r[:, None])
        weights[r == 0.0, :] = 0.0
        first = psi[None, :] ** 2 * weights
        second = psi[None, :] * weights
        sum_first = np.cumsum(first, axis=1)
        sum_second = np.cumsum(second, axis=1)
        rel_first = np.where(first == 0.0, 0.0, np.abs(first) / np.abs(sum_first))
        rel_second = np.where(second == 0.0, 0.0, np.abs(second) / np.abs(sum_second))

    small = (rel_first < ctl.rel_tol) & (rel_second < ctl.rel_tol)
    stop = small.copy()
    stop[:, 1:] &= small[:, :-1]
    if ctl.max_terms > 1:
        stop[:, 0] &= r == 0.0
    converged = stop.any(axis=1)
    index = np.where(converged, stop.argmax(axis=1), ctl.max_terms - 1)
    rows = np.arange(r.size)
    values = np.sqrt(1.0 - r) * sum_first[rows, index] - (1.0 - r) * sum_second[rows, index] ** 2
    return LogCovTable(
        values=values.reshape(shape),
        terms=(index + 1).reshape(shape),
        truncated=(~converged).reshape(shape),
    )


def log_periodogram_cov(
    rho2: float,
    ctl: SeriesControl | None = None,
) -> LogCovValue:
    table = log_periodogram_cov_table(np.asarray([rho2], dtype=float), ctl)
    return LogCovValue(
        value=float(table.values[0]),
        terms=int(table.terms[0]),
        truncated=bool(table.truncated[0]),
    )


def log_periodogram_cov_mc(
    rho2: float,
    reps: int,
    rng: np.random.Generator,
) -> float:
    """
    Monte Carlo covariance of the logs of two correlated χ²₂ variables.

    Each variable is a sum of two squared standard normals; paired normals
    correlate at ρ = √ρ², so the χ²₂ pair correlates at ρ². Diagnostic only.
    """
    if not 0.0 <= rho2 < 1.0:
        msg = f"log_periodogram_cov_mc requires 0 <= rho2 < 1, got {rho2!r}."
        raise DomainError(msg)
    if reps < 2:
        msg = f"log_periodogram_cov_mc requires reps >= 2, got {reps!r}."
        raise DomainError(msg)
    rho = np.sqrt(rho2)
    x = rng.standard_normal((2, reps))
    noise = rng.standard_normal((2, reps))
    y = rho * x + np.sqrt(1.0 - rho2) * noise
    w = np.log(np.sum(x**2, axis=0))
    z = np.log(np.sum(y**2, axis=0))
    return float(np.cov(w, z, ddof=1)[0, 1])
