from __future__ import annotations

import csv
import json
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

from app.base.component import Component
from app.base.errors import ConfigError
from app.model.arfima.model import ArfimaModel
from app.model.harness.config import ExperimentConfig
from app.model.harness.estimators import EstimatorName, Knowledge, KnowledgeKind
from app.model.harness.replication import ReplicationContext
from app.model.jackknife.plan import SubsamplePlan, SubsampleScheme
from app.work.simulate import model_from_payload

if TYPE_CHECKING:
    from app.interface.payload import Payload


def read_series(path: str | Path) -> np.ndarray:
    """
    Load a series stored one value per line.

    A non-numeric first line is taken as a header. Comma-separated lines
    contribute their first column.
    """
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as f:
            rows = [row for row in csv.reader(f) if row and row[0].strip()]
    except OSError as e:
        raise ConfigError(f"Cannot read series from {str(path)!r}: {e}") from e
    values: list[float] = []
    for i, row in enumerate(rows):
        try:
            values.append(float(row[0]))
        except ValueError:
            if i == 0:
                continue
            msg = f"Line {i + 1} of {str(path)!r} is not a number: {row[0]!r}"
            raise ConfigError(msg, diagnostics={"line": i + 1}) from None
    if not values:
        raise ConfigError(f"No values found in {str(path)!r}.")
    return np.asarray(values, dtype=float)


class EstimateWork(Component):
    """
    Description:
    - Runs one estimator on a series read from file and prints a JSON result
    - With a model (``--d --phi --theta``) ``jack-opt`` uses its weights and
      MLE/PW fix the short-memory coefficients; without one, ``jack-opt`` is
      a single feasible pass with orders ``--p --q``
    """

    def __init__(
        self,
        parent: Component,
        payload: Payload,
    ) -> None:
        super().__init__(
            parent=parent,
        )
        self.parent = parent
        self.payload = payload

    def _resolve_config(
        self,
        n: int,
    ) -> ExperimentConfig:
        estimator = EstimatorName.from_any(self.payload.require("work.estimator"))
        if self.payload.get("work.model.given"):
            model = model_from_payload(self.payload)
            knowledge = Knowledge()
        else:
            model = ArfimaModel()
            p = self.payload.get("work.p") or 0
            q = self.payload.get("work.q") or 0
            knowledge = Knowledge(KnowledgeKind.MISSPECIFIED, int(p), int(q))
        scheme = self.payload.get("work.scheme") or SubsampleScheme.NON_OVERLAPPING
        values: dict[str, Any] = {
            "model": model,
            "n": n,
            "alpha": self.payload.get("work.alpha"),
            "m_values": (self.payload.get("work.m") or 2,),
            "schemes": (scheme,),
            "estimators": (estimator,),
            "knowledge": knowledge,
            "reps": 1,
        }
        for key in ("tau", "max_iter"):
            if self.payload.get(f"work.{key}") is not None:
                values[key] = self.payload.get(f"work.{key}")
        return ExperimentConfig(**values)

    def run(self) -> dict[str, Any]:
        y = read_series(self.payload.require("io.input"))
        cfg = self._resolve_config(y.size)
        estimator = cfg.estimators[0]
        plan = SubsamplePlan(cfg.n, cfg.m_values[0], cfg.schemes[0]) if estimator.is_jackknife() else None
        self.info(
            f"Estimating d with '{estimator}'",
            context={"n": cfg.n, "alpha": cfg.alpha, "knowledge": str(cfg.knowledge)},
        )
        d_hat = ReplicationContext(cfg, parent=self).estimate(estimator, y, plan)
        result = {
            "estimator": str(estimator),
            "d_hat": d_hat,
            "n": cfg.n,
            "alpha": cfg.alpha,
            "m": plan.m if plan else None,
            "scheme": plan.scheme.code if plan else None,
            "knowledge": str(cfg.knowledge),
        }
        sys.stdout.write(json.dumps(result) + "\n")
        return result
