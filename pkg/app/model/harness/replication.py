from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from app.base.component import Component
from app.base.errors import JackLprError
from app.model.altestimators.arma import ArmaCoefficients
from app.model.altestimators.gs import GsConfig, gs_estimate
from app.model.altestimators.mle import fit_mle
from app.model.altestimators.pw import fit_pw
from app.model.arfima.simulate import simulate
from app.model.harness.config import ExperimentConfig
from app.model.harness.estimators import EstimatorName
from app.model.jackknife.covariance import CovarianceEngine, default_engine
from app.model.jackknife.estimator import jackknife_estimate
from app.model.jackknife.feasible import FeasibleJackknife, IterationConfig
from app.model.jackknife.plan import SubsamplePlan, SubsampleScheme
from app.model.jackknife.weights import chambers_weights, optimal_weights
from app.model.lpr.estimator import lpr_estimate

CellKey = tuple[EstimatorName, SubsampleScheme | None, int | None]


def replication_rng(
    seed: int,
    rep_index: int,
) -> np.random.Generator:
    """Counter-based stream of replication ``rep_index``, independent of scheduling."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(rep_index,))))


@dataclass(frozen=True)
class ReplicationRecord:
    """
    Estimates of every cell on one simulated draw.

    Attrs:
        rep_index: replication number
        estimates: d̂ per (estimator, scheme, m) cell that succeeded
        failures: error message per cell that failed
    """

    rep_index: int
    estimates: dict[CellKey, float] = field(default_factory=dict)
    failures: dict[CellKey, str] = field(default_factory=dict)


class ReplicationContext(Component):
    """
    Description:
    - Runs the estimators of one configuration on a draw
    - Shares the covariance engine across replications and worker threads
    - A failing estimator is recorded against its cell; the other cells still run

    Attrs:
    - cfg: ExperimentConfig
    - engine: CovarianceEngine
    """

    def __init__(
        self,
        cfg: ExperimentConfig,
        engine: CovarianceEngine | None = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(**kwargs)
        self.cfg = cfg
        self.engine = engine or default_engine()
        self.gs = GsConfig(alpha=cfg.alpha, delta=cfg.gs_delta)
        self.orders = cfg.knowledge.orders(cfg.model)
        self.known_short = ArmaCoefficients(ar=cfg.model.ar, ma=cfg.model.ma)

    def _feasible(
        self,
        plan: SubsamplePlan,
        iteration: IterationConfig,
    ) -> FeasibleJackknife:
        p, q = self.orders
        return FeasibleJackknife(
            plan=plan,
            alpha=self.cfg.alpha,
            p=p,
            q=q,
            cfg=iteration,
            gs=self.gs,
            engine=self.engine,
            parent=self,
        )

    def estimate(
        self,
        estimator: EstimatorName,
        y: np.ndarray,
        plan: SubsamplePlan | None = None,
    ) -> float:
        cfg = self.cfg
        if estimator is EstimatorName.LPR:
            return lpr_estimate(y, cfg.alpha).d
        if estimator is EstimatorName.GS:
            return gs_estimate(y, self.gs)
        if estimator is EstimatorName.JACK_CHAMBERS:
            return jackknife_estimate(y, plan, chambers_weights(plan.n, plan.m, cfg.alpha), cfg.alpha)
        if estimator is EstimatorName.JACK_OPT:
            if cfg.knowledge.is_true():
                bundle = self.engine.get(cfg.model, plan, cfg.alpha)
                return jackknife_estimate(y, plan, optimal_weights(plan, cfg.alpha, bundle), cfg.alpha)
            return self._feasible(plan, IterationConfig.one_pass()).run(y).d_hat
        if estimator is EstimatorName.JACK_FEASIBLE:
            return self._feasible(plan, IterationConfig(tau=cfg.tau, max_iter=cfg.max_iter)).run(y).d_hat
        p, q = self.orders
        fixed = self.known_short if cfg.knowledge.is_true() else None
        if estimator is EstimatorName.MLE:
            return fit_mle(y, p, q, fix_short=fixed).d
        return fit_pw(y, p, q, fix_short=fixed)

    def run(
        self,
        rep_index: int,
    ) -> ReplicationRecord:
        y = simulate(self.cfg.model, self.cfg.n, replication_rng(self.cfg.seed, rep_index))
        estimates: dict[CellKey, float] = {}
        failures: dict[CellKey, str] = {}
        for estimator, scheme, m in self.cfg.cells():
            key = (estimator, scheme, m)
            plan = SubsamplePlan(self.cfg.n, m, scheme) if estimator.is_jackknife() else None
            try:
                value = self.estimate(estimator, y, plan)
            except (JackLprError, np.linalg.LinAlgError) as e:
                failures[key] = str(e)
                self.debug(
                    "Estimator failed",
                    context={"rep": rep_index, "estimator": str(estimator), "m": m, "error": str(e)},
                )
                continue
            if not np.isfinite(value):
                failures[key] = "non-finite estimate"
                continue
            estimates[key] = float(value)
        return ReplicationRecord(rep_index=rep_index, estimates=estimates, failures=failures)


def run_replication(
    cfg: ExperimentConfig,
    rep_index: int,
    engine: CovarianceEngine | None = None,
) -> ReplicationRecord:
    """
    Simulate draw ``rep_index`` and run every configured estimator on it.

    Example:
    ```python
        record = run_replication(cfg, 0)
        record.estimates[(EstimatorName.LPR, None, None)]
    ```
    """
    return ReplicationContext(cfg, engine=engine).run(rep_index)
