from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from app.base.component import Component
from app.base.errors import DomainError
from app.model.arfima.model import ArfimaModel
from app.model.arfima.spectrum import spectral_density
from app.model.jackknife.plan import SubsamplePlan
from app.model.spectral.grid import DEFAULT_ALPHA, SpectralGrid
from app.model.spectral.regressors import lpr_regressors
from app.model.specfun.dirichlet import dirichlet_kernel_abs2
from app.model.specfun.logcov import SeriesControl, log_periodogram_cov_table

# Upper clip of ρ before it enters the log-periodogram series
RHO_MAX = 1.0 - 1e-9


def periodogram_correlation(
    model: ArfimaModel,
    l: int,
    lam: ArrayLike,
    mu: ArrayLike,
) -> float | np.ndarray:
    """
    Finite-sample correlation of periodogram ordinates at λ and μ.

        [3/l + (|Δ(λ-μ)|² + |Δ(λ+μ)|²)/l² · f(λ)/f(μ)]
        / √[(1 + 3/l + |Δ(2λ)|²/l²)(1 + 3/l + |Δ(2μ)|²/l²)]

    with Δ the length-l Dirichlet kernel. Broadcasts over λ and μ and returns
    the unclipped value.
    """
    if int(l) != l or l < 2:
        msg = f"Sub-sample length l must be an integer >= 2, got {l!r}."
        raise DomainError(msg)
    lam = np.asarray(lam, dtype=float)
    mu = np.asarray(mu, dtype=float)
    if np.any(lam <= 0.0) or np.any(mu <= 0.0) or np.any(lam > np.pi) or np.any(mu > np.pi):
        msg = "periodogram_correlation needs frequencies in (0, π]."
        raise DomainError(msg)
    scale = 1.0 / l**2
    cross = dirichlet_kernel_abs2(l, lam - mu) + dirichlet_kernel_abs2(l, lam + mu)
    numerator = 3.0 / l + scale * cross * spectral_density(model, lam) / spectral_density(model, mu)
    left = 1.0 + 3.0 / l + scale * dirichlet_kernel_abs2(l, 2.0 * lam)
    right = 1.0 + 3.0 / l + scale * dirichlet_kernel_abs2(l, 2.0 * mu)
    result = numerator / np.sqrt(left * right)
    if np.ndim(result) == 0:
        return float(result)
    return result


def clip_correlation(
    rho: ArrayLike,
) -> tuple[np.ndarray, int]:
    """Clip ρ to [0, 1 - 1e-9]; returns the clipped values and the clip count."""
    values = np.asarray(rho, dtype=float)
    clipped = np.clip(values, 0.0, RHO_MAX)
    return clipped, int(np.count_nonzero(clipped != values))


@dataclass(frozen=True, eq=False)
class CovarianceBundle:
    """
    Covariances of the full-sample and sub-sample LPR estimates.

    Attrs:
        c_star: Cov(d̂_n, d̂_i) for i = 1..m (one value broadcast)
        c_dagger: Cov(d̂_i, d̂_j), symmetric, zero diagonal (unused)
        model_used: model whose spectrum fed the correlations
        plan: sub-sampling plan
        alpha: bandwidth exponent
        diagnostics: clip and truncation counts
    """

    c_star: np.ndarray
    c_dagger: np.ndarray
    model_used: ArfimaModel
    plan: SubsamplePlan
    alpha: float
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        m = self.plan.m
        if self.c_star.shape != (m,) or self.c_dagger.shape != (m, m):
            msg = f"Covariance shapes {self.c_star.shape}, {self.c_dagger.shape} do not match m = {m}."
            raise DomainError(msg)
        if not (np.all(np.isfinite(self.c_star)) and np.all(np.isfinite(self.c_dagger))):
            msg = "Covariance bundle contains non-finite values."
            raise DomainError(msg, diagnostics=self.diagnostics)
        if not np.array_equal(self.c_dagger, self.c_dagger.T):
            msg = "Sub-sample covariance matrix must be symmetric."
            raise DomainError(msg)
        self.c_star.setflags(write=False)
        self.c_dagger.setflags(write=False)

    def scaled(
        self,
        factor: float,
    ) -> CovarianceBundle:
        return replace(
            self,
            c_star=self.c_star * factor,
            c_dagger=self.c_dagger * factor,
            diagnostics={**self.diagnostics, "scaled": float(factor)},
        )


def _double_sum(
    model: ArfimaModel,
    l: int,
    left: SpectralGrid,
    right: SpectralGrid,
    ctl: SeriesControl,
    rho_override: float | None,
) -> tuple[float, dict[str, int]]:
    """Σ_j Σ_k a_j a'_k Cov(log I(λ_j), log I(μ_k)) / (4 S_xx S'_xx)."""
    reg_left = lpr_regressors(left)
    reg_right = lpr_regressors(right)
    if rho_override is None:
        rho = periodogram_correlation(model, l, left.lambdas[:, None], right.lambdas[None, :])
    else:
        rho = np.full((left.N, right.N), float(rho_override))
    clipped, clips = clip_correlation(rho)
    table = log_periodogram_cov_table(clipped**2, ctl)
    total = reg_left.a @ table.values @ reg_right.a
    value = float(total / (4.0 * reg_left.sxx * reg_right.sxx))
    return value, {"clipped": clips, "truncated": table.truncated_count, "max_terms": int(table.terms.max())}


def compute_covariances(
    model: ArfimaModel,
    plan: SubsamplePlan,
    alpha: float = DEFAULT_ALPHA,
    ctl: SeriesControl | None = None,
    rho_override: float | None = None,
) -> CovarianceBundle:
    """
    c*_{n,i} over (full grid λ_j, sub-sample grid μ_k) and c†_{i,j} over the
    sub-sample grid twice, both with l the sub-sample length.

    The correlation carries no sub-sample phase, so c* is one value for all
    i and c† one value off the diagonal, for either scheme.
    """
    ctl = ctl or SeriesControl()
    full = SpectralGrid(plan.n, alpha)
    sub = SpectralGrid(plan.l, alpha)
    c_star, star_diag = _double_sum(model, plan.l, full, sub, ctl, rho_override)
    c_dagger, dagger_diag = _double_sum(model, plan.l, sub, sub, ctl, rho_override)
    m = plan.m
    off_diagonal = np.full((m, m), c_dagger)
    np.fill_diagonal(off_diagonal, 0.0)
    return CovarianceBundle(
        c_star=np.full(m, c_star),
        c_dagger=off_diagonal,
        model_used=model,
        plan=plan,
        alpha=float(alpha),
        diagnostics={
            "clipped": star_diag["clipped"] + dagger_diag["clipped"],
            "truncated": star_diag["truncated"] + dagger_diag["truncated"],
            "max_terms": max(star_diag["max_terms"], dagger_diag["max_terms"]),
        },
    )


class CovarianceEngine(Component):
    """
    Description:
    - Computes covariance bundles and keeps the most recent ones in a bounded
      LRU cache keyed by (model, n, m, scheme, alpha)
    - Safe to share between worker threads; a miss computes outside the lock
    - ``rho_override`` bypasses the cache

    Attrs:
    - maxsize: number of cached bundles
    - hits, misses: cache counters

    Example:
    ```python
    engine = CovarianceEngine(level="DEBUG")
    bundle = engine.get(ArfimaModel(ar=[0.4]), SubsamplePlan(576, 2))
    bundle.c_star
    ```
    """

    def __init__(
        self,
        maxsize: int = 256,
        ctl: SeriesControl | None = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(**kwargs)
        self.maxsize = self._resolve_maxsize(maxsize)
        self.ctl = ctl or SeriesControl()
        self.hits = 0
        self.misses = 0
        self._cache: OrderedDict[tuple, CovarianceBundle] = OrderedDict()
        self._lock = threading.Lock()

    def _resolve_maxsize(
        self,
        maxsize: int,
    ) -> int:
        if int(maxsize) != maxsize or maxsize < 1:
            msg = f"Cache size must be a positive integer, got {maxsize!r}."
            self.error(msg)
            raise DomainError(msg)
        return int(maxsize)

    def get(
        self,
        model: ArfimaModel,
        plan: SubsamplePlan,
        alpha: float = DEFAULT_ALPHA,
        rho_override: float | None = None,
    ) -> CovarianceBundle:
        if rho_override is not None:
            return compute_covariances(model, plan, alpha, self.ctl, rho_override)
        key = (model, plan.n, plan.m, plan.scheme.value, float(alpha))
        with self._lock:
            bundle = self._cache.get(key)
            if bundle is not None:
                self._cache.move_to_end(key)
                self.hits += 1
                return bundle
            self.misses += 1
        bundle = compute_covariances(model, plan, alpha, self.ctl)
        self.debug(
            "Computed covariance bundle",
            context={
                "model": model.describe(),
                "plan": plan.describe(),
                "alpha": alpha,
                "c_star": float(bundle.c_star[0]),
                "c_dagger": float(bundle.c_dagger[0, 1]),
                **bundle.diagnostics,
            },
        )
        with self._lock:
            self._cache[key] = bundle
            self._cache.move_to_end(key)
            while len(self._cache) > self.maxsize:
                self._cache.popitem(last=False)
        return bundle

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)


_default_engine: CovarianceEngine | None = None
_default_lock = threading.Lock()


def default_engine() -> CovarianceEngine:
    global _default_engine
    with _default_lock:
        if _default_engine is None:
            _default_engine = CovarianceEngine()
        return _default_engine


def estimator_covariances(
    model: ArfimaModel,
    plan: SubsamplePlan,
    alpha: float = DEFAULT_ALPHA,
    engine: CovarianceEngine | None = None,
    rho_override: float | None = None,
) -> CovarianceBundle:
    return (engine or default_engine()).get(model, plan, alpha, rho_override)
