from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from app.base.errors import DomainError, NumericalError
from app.model.lpr.estimator import lpr_estimate
from app.model.spectral.grid import DEFAULT_ALPHA, bandwidth


def default_q_grid() -> np.ndarray:
    """1.00, 1.05, ..., 2.00."""
    return np.round(1.0 + 0.05 * np.arange(21), 12)


def _tau_star(
    r: int,
) -> float:
    """-(2π)^{2r} r/((2r)!(2r+1)²)."""
    return -((2.0 * np.pi) ** (2 * r)) * r / (math.factorial(2 * r) * (2 * r + 1) ** 2)


def _moment_ratio(
    r: int,
) -> float:
    """
    Leading coefficient of the omitted λ^{2+2r} term after projecting the
    regressor on (1, λ², ..., λ^{2r}) under uniform frequencies on [0, 1].
    """
    k = np.arange(1, r + 2, dtype=float)
    mu = 2.0 * k / (2.0 * k + 1.0) ** 2
    i, j = np.meshgrid(k, k, indexing="ij")
    gamma = 4.0 * i * j / ((2.0 * i + 1.0) * (2.0 * j + 1.0) * (2.0 * i + 2.0 * j + 1.0))
    inner = gamma[:r, :r]
    numerator = mu[r] - mu[:r] @ linalg.solve(inner, gamma[:r, r], assume_a="pos")
    denominator = 1.0 - mu[:r] @ linalg.solve(inner, mu[:r], assume_a="pos")
    return float(numerator / denominator)


def _tau(
    r: int,
) -> float:
    """-(2π)^{2+2r}/(2(2+2r)!) times the projected moment ratio."""
    return -((2.0 * np.pi) ** (2 + 2 * r)) / (2.0 * math.factorial(2 + 2 * r)) * _moment_ratio(r)


def gs_delta(
    r: int,
    q_grid: ArrayLike,
) -> float:
    """
    δ = τ_r / (τ*_r Σ_k q_k^{2+2r}).

    Example:
    ```python
        gs_delta(1, default_q_grid())   # about -0.0077
    ```
    """
    if int(r) != r or r < 1:
        msg = f"GS bias-reduction order must be an integer >= 1, got {r!r}."
        raise DomainError(msg)
    q = np.asarray(q_grid, dtype=float)
    denominator = _tau_star(int(r)) * float(np.sum(q ** (2 + 2 * r)))
    if denominator == 0.0 or not np.isfinite(denominator):
        msg = "GS delta has a zero denominator."
        raise NumericalError(msg, diagnostics={"r": r})
    return _tau(int(r)) / denominator


@dataclass(frozen=True, eq=False)
class GsConfig:
    """
    Settings of the weighted-average GS estimator.

    Attrs:
        r: bias-reduction order; 0 keeps only the intercept column
        q_grid: bandwidth multipliers, strictly increasing from 1
        delta: tuning constant, computed by gs_delta when None
        alpha: exponent of the base bandwidth ⌊n^α⌋
        bandwidth: externally supplied base bandwidth, overrides alpha
    """

    r: int = 1
    q_grid: np.ndarray = field(default_factory=default_q_grid)
    delta: float | None = None
    alpha: float = DEFAULT_ALPHA
    bandwidth: int | None = None

    def __post_init__(self) -> None:
        q = np.array(self.q_grid, dtype=float)
        object.__setattr__(self, "q_grid", q)
        q.setflags(write=False)
        if int(self.r) != self.r or self.r < 0:
            msg = f"GS order r must be a non-negative integer, got {self.r!r}."
            raise DomainError(msg)
        if q.ndim != 1 or q.size == 0 or q[0] != 1.0 or np.any(np.diff(q) <= 0.0):
            msg = "GS q grid must start at 1 and be strictly increasing."
            raise DomainError(msg)
        if q.size <= self.r + 2:
            msg = f"GS needs more than r + 2 = {self.r + 2} bandwidths, got {q.size}."
            raise DomainError(msg)
        if self.delta is not None and (self.delta == 0.0 or not np.isfinite(self.delta)):
            msg = f"GS delta must be finite and non-zero, got {self.delta!r}."
            raise DomainError(msg)

    def resolve_delta(self) -> float:
        if self.delta is not None:
            return float(self.delta)
        return gs_delta(self.r, self.q_grid)


def gs_design(
    cfg: GsConfig,
) -> np.ndarray:
    """Rows (1, q², ..., q^{2r}, q^{2+2r} - δΣq^{2+2r})."""
    q = cfg.q_grid
    if cfg.r == 0:
        return np.ones((q.size, 1))
    columns = [q ** (2 * k) for k in range(cfg.r + 1)]
    top = q ** (2 + 2 * cfg.r)
    columns.append(top - cfg.resolve_delta() * np.sum(top))
    return np.column_stack(columns)


def gs_covariance(
    q_grid: ArrayLike,
) -> np.ndarray:
    """Ω_ij = 1/max(q_i, q_j)."""
    q = np.asarray(q_grid, dtype=float)
    return 1.0 / np.maximum.outer(q, q)


def gs_combine(
    estimates: ArrayLike,
    cfg: GsConfig,
) -> np.ndarray:
    """GLS coefficients (Z'Ω⁻¹Z)⁻¹Z'Ω⁻¹d̂; the first is the GS estimate."""
    d = np.asarray(estimates, dtype=float)
    if d.shape != cfg.q_grid.shape:
        msg = f"Expected {cfg.q_grid.size} LPR estimates, got shape {d.shape}."
        raise DomainError(msg)
    Z = gs_design(cfg)
    if np.linalg.matrix_rank(Z) < Z.shape[1]:
        msg = "GS design matrix is rank deficient."
        raise NumericalError(msg, diagnostics={"columns": Z.shape[1], "rank": int(np.linalg.matrix_rank(Z))})
    factor = linalg.cho_factor(gs_covariance(cfg.q_grid))
    weighted_Z = linalg.cho_solve(factor, Z)
    weighted_d = linalg.cho_solve(factor, d)
    return linalg.solve(Z.T @ weighted_Z, Z.T @ weighted_d, assume_a="sym")


def gs_bandwidths(
    n: int,
    cfg: GsConfig,
) -> np.ndarray:
    """⌊q_i N⌋ for the base bandwidth N."""
    base = cfg.bandwidth if cfg.bandwidth is not None else bandwidth(n, cfg.alpha)
    return np.floor(np.round(cfg.q_grid * base, 9)).astype(int)


def gs_estimate(
    series: ArrayLike,
    cfg: GsConfig | None = None,
) -> float:
    """
    Weighted average of LPR estimates at bandwidths ⌊q_i N⌋, combined by GLS.
    """
    cfg = cfg or GsConfig()
    y = np.asarray(series, dtype=float)
    estimates = [lpr_estimate(y, N=int(N)).d for N in gs_bandwidths(y.size, cfg)]
    return float(gs_combine(estimates, cfg)[0])
