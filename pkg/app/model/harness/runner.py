from __future__ import annotations

import concurrent.futures as cf
import time
from typing import Any

from app.base.component import Component
from app.base.errors import ConfigError
from app.model.harness.config import ExperimentConfig
from app.model.harness.replication import ReplicationContext, ReplicationRecord
from app.model.harness.summary import McSummary, summarise
from app.model.jackknife.covariance import CovarianceEngine, default_engine

# Progress is logged every this many finished replications
_PROGRESS_EVERY = 500


class ExperimentRunner(Component):
    """
    Description:
    - Executes the replications of an ExperimentConfig and aggregates them
    - Replication r always draws from the stream of (seed, r), and records
      are stored by index, so the summary is identical for any thread count
    - Failed cells are counted per cell and excluded from the moments

    Attrs:
    - cfg: ExperimentConfig
    - threads: worker count (1 runs in the calling thread)
    - engine: CovarianceEngine shared by all workers

    Example:
    ```python
    runner = ExperimentRunner(cfg=cfg, threads=4, level="INFO")
    summary = runner.run()
    summary.cell("jack-opt", "NO", 2).bias
    ```
    """

    def __init__(
        self,
        cfg: ExperimentConfig,
        threads: int | None = None,
        engine: CovarianceEngine | None = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(**kwargs)
        self.cfg = cfg
        self.threads = self._resolve_threads(threads if threads is not None else cfg.threads)
        self.engine = engine or default_engine()
        self.context = ReplicationContext(cfg, engine=self.engine, parent=self)

    def _resolve_threads(
        self,
        threads: int | None,
    ) -> int:
        if threads is None:
            return 1
        if int(threads) != threads or threads < 1:
            msg = f"Thread count must be a positive integer, got {threads!r}."
            raise self.fail(msg, ConfigError)
        return int(threads)

    def _replicate(
        self,
        rep_index: int,
    ) -> ReplicationRecord:
        return self.context.run(rep_index)

    def run(self) -> McSummary:
        cfg = self.cfg
        self.info(
            "Starting Monte Carlo experiment",
            context={
                "fingerprint": cfg.fingerprint(),
                "model": cfg.model.describe(),
                "n": cfg.n,
                "reps": cfg.reps,
                "estimators": [str(e) for e in cfg.estimators],
                "knowledge": str(cfg.knowledge),
                "threads": self.threads,
            },
        )
        start = time.perf_counter()
        records: list[ReplicationRecord | None] = [None] * cfg.reps
        if self.threads == 1:
            for rep in range(cfg.reps):
                records[rep] = self._replicate(rep)
                self._progress(rep + 1)
        else:
            with cf.ThreadPoolExecutor(max_workers=self.threads) as ex:
                for done, record in enumerate(ex.map(self._replicate, range(cfg.reps)), start=1):
                    records[record.rep_index] = record
                    self._progress(done)
        wall_time = time.perf_counter() - start
        summary = summarise(cfg, records, wall_time=wall_time)
        for cell in summary.cells:
            if cell.failures:
                self.warning("Cell has failed replications", context=cell.describe())
        self.info(
            "Finished Monte Carlo experiment",
            context={
                "wall_time": round(wall_time, 3),
                "cache_hits": self.engine.hits,
                "cache_misses": self.engine.misses,
                "cells": [cell.describe() for cell in summary.cells],
            },
        )
        return summary

    def _progress(
        self,
        done: int,
    ) -> None:
        if done % _PROGRESS_EVERY == 0 or done == self.cfg.reps:
            self.debug("Replications finished", context={"done": done, "reps": self.cfg.reps})


def run_experiment(
    cfg: ExperimentConfig,
    threads: int | None = None,
) -> McSummary:
    return ExperimentRunner(cfg=cfg, threads=threads).run()
