from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from app.model.harness.config import ExperimentConfig
from app.model.harness.estimators import EstimatorName
from app.model.harness.replication import ReplicationRecord
from app.model.jackknife.plan import SubsampleScheme


@dataclass(frozen=True)
class McCell:
    """
    Monte Carlo moments of one (estimator, scheme, m) cell.

    ``reps`` is the configured replication count; moments use the
    ``reps - failures`` successful draws. ``bias_mc_se`` is the sample
    standard deviation (ddof 1) over √successes, NaN below two successes.
    """

    estimator: EstimatorName
    scheme: SubsampleScheme | None
    m: int | None
    reps: int
    failures: int
    bias: float
    bias_mc_se: float
    rmse: float

    @property
    def successes(self) -> int:
        return self.reps - self.failures

    def describe(self) -> dict[str, Any]:
        return {
            "estimator": str(self.estimator),
            "scheme": self.scheme.code if self.scheme else None,
            "m": self.m,
            "bias": self.bias,
            "bias_mc_se": self.bias_mc_se,
            "rmse": self.rmse,
            "failures": self.failures,
        }


@dataclass(frozen=True)
class McSummary:
    cfg: ExperimentConfig
    cells: tuple[McCell, ...]
    wall_time: float = field(default=0.0, compare=False)

    def cell(
        self,
        estimator: EstimatorName | str,
        scheme: SubsampleScheme | str | None = None,
        m: int | None = None,
    ) -> McCell:
        estimator = EstimatorName.from_any(estimator)
        scheme = SubsampleScheme.from_any(scheme) if scheme is not None else None
        for item in self.cells:
            if item.estimator is estimator and item.scheme is scheme and item.m == m:
                return item
        msg = f"No cell for estimator={estimator}, scheme={scheme}, m={m}."
        raise KeyError(msg)


def cell_moments(
    estimates: np.ndarray,
    d0: float,
) -> tuple[float, float, float]:
    """(bias, bias_mc_se, rmse) of the estimates around d0."""
    errors = np.asarray(estimates, dtype=float) - d0
    k = errors.size
    if k == 0:
        return math.nan, math.nan, math.nan
    bias = float(np.sum(errors) / k)
    rmse = float(np.sqrt(np.sum(errors * errors) / k))
    se = float(np.std(errors, ddof=1) / np.sqrt(k)) if k >= 2 else math.nan
    return bias, se, rmse


def summarise(
    cfg: ExperimentConfig,
    records: Iterable[ReplicationRecord],
    wall_time: float = 0.0,
) -> McSummary:
    """
    Aggregate replication records into per-cell moments.

    Records are ordered by replication index before summation, so the result
    does not depend on the order in which workers finished.
    """
    ordered = sorted(records, key=lambda record: record.rep_index)
    cells = []
    for key in cfg.cells():
        values = np.array([r.estimates[key] for r in ordered if key in r.estimates], dtype=float)
        failures = sum(1 for r in ordered if key not in r.estimates)
        bias, se, rmse = cell_moments(values, cfg.model.d)
        estimator, scheme, m = key
        cells.append(
            McCell(
                estimator=estimator,
                scheme=scheme,
                m=m,
                reps=cfg.reps,
                failures=failures,
                bias=bias,
                bias_mc_se=se,
                rmse=rmse,
            )
        )
    return McSummary(cfg=cfg, cells=tuple(cells), wall_time=wall_time)
