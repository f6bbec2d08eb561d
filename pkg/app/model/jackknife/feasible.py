from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from app.base.component import Component
from app.base.errors import DomainError, JackLprError, NumericalError
from app.model.altestimators.arma import fit_arma_css
from app.model.altestimators.fracdiff import fracdiff
from app.model.altestimators.gs import GsConfig, gs_estimate
from app.model.arfima.model import ArfimaModel
from app.model.jackknife.covariance import CovarianceEngine, default_engine
from app.model.jackknife.estimator import jackknife_estimate
from app.model.jackknife.plan import SubsamplePlan
from app.model.jackknife.weights import WeightProvenance, optimal_weights
from app.model.spectral.grid import DEFAULT_ALPHA

# Memory parameter of the working model is kept inside the stationary range
D_MODEL_BOUND = 0.49


@dataclass(frozen=True)
class IterationConfig:
    """
    Stopping rule of the feasible iteration.

    Attrs:
        tau: tolerance τ^{(k)} for k >= 1
        max_iter: largest number of jackknife passes
        first_tau: tolerance τ^{(0)} of the first comparison, ``tau`` when None;
            ``math.inf`` stops after one pass
    """

    tau: float = 1e-4
    max_iter: int = 20
    first_tau: float | None = None

    def __post_init__(self) -> None:
        if not self.tau > 0.0:
            msg = f"Iteration tolerance must be > 0, got {self.tau!r}."
            raise DomainError(msg)
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            msg = f"max_iter must be a positive integer, got {self.max_iter!r}."
            raise DomainError(msg)
        if self.first_tau is not None and not self.first_tau > 0.0:
            msg = f"First iteration tolerance must be > 0, got {self.first_tau!r}."
            raise DomainError(msg)

    @classmethod
    def one_pass(cls) -> IterationConfig:
        return cls(first_tau=math.inf)

    def tolerance(
        self,
        k: int,
    ) -> float:
        if k == 0 and self.first_tau is not None:
            return float(self.first_tau)
        return float(self.tau)


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    d_filter: float
    ar: tuple[float, ...]
    ma: tuple[float, ...]
    estimate: float
    change: float


@dataclass(frozen=True)
class FeasibleResult:
    d_hat: float
    iterations: int
    converged: bool
    d_start: float
    trace: tuple[IterationRecord, ...] = field(default_factory=tuple)

    def describe(self) -> dict[str, Any]:
        return {
            "d_hat": self.d_hat,
            "iterations": self.iterations,
            "converged": self.converged,
            "d_start": self.d_start,
        }


class FeasibleJackknife(Component):
    """
    Description:
    - Optimal jackknife with weights built on an estimated model
    - d^f starts at the GS estimate; each pass fractionally differences the
      demeaned series by d^f, fits ARMA(p, q) by conditional sum of squares,
      builds optimal weights for ARFIMA(p, d^f, q) and takes the jackknife
      estimate, which becomes the next d^f
    - Stops once |d^{(k)} - d^{(k-1)}| <= τ^{(k-1)}; after max_iter passes the
      last iterate is returned flagged as not converged
    - With p = q = 0 the ARMA fit is skipped and the working model is
      fractional noise

    Attrs:
    - plan: SubsamplePlan
    - alpha: bandwidth exponent
    - p, q: fitted ARMA orders
    - cfg: IterationConfig
    - gs: GsConfig of the starting estimate
    - engine: CovarianceEngine shared with other components

    Example:
    ```python
    jack = FeasibleJackknife(plan=SubsamplePlan(576, 2), p=1, q=0)
    result = jack.run(y)
    result.d_hat, result.iterations, result.converged
    ```
    """

    def __init__(
        self,
        plan: SubsamplePlan,
        alpha: float = DEFAULT_ALPHA,
        p: int = 0,
        q: int = 0,
        cfg: IterationConfig | None = None,
        gs: GsConfig | None = None,
        engine: CovarianceEngine | None = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(**kwargs)
        self.plan = plan
        self.alpha = float(alpha)
        self.p, self.q = self._resolve_orders(p, q)
        self.cfg = cfg or IterationConfig()
        self.gs = gs or GsConfig(alpha=self.alpha)
        self.engine = engine or default_engine()

    def _resolve_orders(
        self,
        p: int,
        q: int,
    ) -> tuple[int, int]:
        if int(p) != p or int(q) != q or p < 0 or q < 0:
            msg = f"ARMA orders must be non-negative integers, got p={p!r}, q={q!r}."
            self.error(msg)
            raise DomainError(msg)
        return int(p), int(q)

    def _working_model(
        self,
        series: np.ndarray,
        d_filter: float,
        iteration: int,
    ) -> ArfimaModel:
        d = float(np.clip(d_filter, -D_MODEL_BOUND, D_MODEL_BOUND))
        if self.p == 0 and self.q == 0:
            return ArfimaModel(d=d)
        try:
            fit = fit_arma_css(fracdiff(series - np.mean(series), d_filter), self.p, self.q)
        except JackLprError as e:
            msg = f"Iteration {iteration}: ARMA({self.p},{self.q}) fit on the differenced series failed: {e.message}"
            raise self.fail(
                msg,
                NumericalError,
                diagnostics={**e.diagnostics, "step": "arma-fit", "iteration": iteration},
                context={"d_filter": d_filter},
            ) from e
        return ArfimaModel(d=d, ar=fit.ar, ma=fit.ma)

    def run(
        self,
        series: ArrayLike,
    ) -> FeasibleResult:
        y = np.asarray(series, dtype=float)
        d_start = gs_estimate(y, self.gs)
        previous = d_start
        trace: list[IterationRecord] = []
        for k in range(1, self.cfg.max_iter + 1):
            model = self._working_model(y, previous, k)
            bundle = self.engine.get(model, self.plan, self.alpha)
            weights = optimal_weights(self.plan, self.alpha, bundle, WeightProvenance.FEASIBLE, iteration=k)
            estimate = jackknife_estimate(y, self.plan, weights, self.alpha)
            change = abs(estimate - previous)
            trace.append(
                IterationRecord(
                    iteration=k,
                    d_filter=previous,
                    ar=model.ar,
                    ma=model.ma,
                    estimate=estimate,
                    change=change,
                )
            )
            self.debug("Feasible iteration", context={"iteration": k, "d_filter": previous, "estimate": estimate})
            if change <= self.cfg.tolerance(k - 1):
                return FeasibleResult(d_hat=estimate, iterations=k, converged=True, d_start=d_start, trace=tuple(trace))
            previous = estimate
        self.warning(
            "Feasible jackknife did not converge",
            context={"max_iter": self.cfg.max_iter, "last_change": trace[-1].change},
        )
        return FeasibleResult(
            d_hat=trace[-1].estimate,
            iterations=self.cfg.max_iter,
            converged=False,
            d_start=d_start,
            trace=tuple(trace),
        )


def feasible_jackknife(
    series: ArrayLike,
    plan: SubsamplePlan,
    alpha: float = DEFAULT_ALPHA,
    p: int = 0,
    q: int = 0,
    cfg: IterationConfig | None = None,
) -> FeasibleResult:
    return FeasibleJackknife(plan=plan, alpha=alpha, p=p, q=q, cfg=cfg).run(series)
