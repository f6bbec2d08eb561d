from __future__ import annotations

import sys
from pathlib import Path
from typing import TYPE_CHECKING

from app.base.component import Component
from app.model.harness.config import ExperimentConfig
from app.model.harness.emit import emit, write
from app.model.harness.runner import ExperimentRunner
from app.model.harness.summary import McSummary

if TYPE_CHECKING:
    from app.interface.payload import Payload


class MonteCarloWork(Component):
    """Runs the experiment described by ``--config`` and writes its summary table."""

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

    def _resolve_threads(
        self,
        cfg: ExperimentConfig,
    ) -> int:
        # --threads, then the config file, then JLP_THREADS
        cli = self.payload.origin.get("threads")
        if cli is not None:
            return int(cli)
        if cfg.threads is not None:
            return cfg.threads
        return int(self.payload.get("work.threads") or 1)

    def run(self) -> McSummary:
        cfg = ExperimentConfig.from_file(self.payload.require("io.config"), parent=self)
        if self.payload.get("io.output"):
            cfg = cfg.with_overrides(output=Path(self.payload.get("io.output")))
        if self.payload.get("io.format"):
            cfg = cfg.with_overrides(format=self.payload.get("io.format"))
        runner = ExperimentRunner(cfg, threads=self._resolve_threads(cfg), parent=self)
        summary = runner.run()
        if cfg.output is not None:
            write(summary, cfg.output, cfg.format)
            self.info(f"Summary written to '{cfg.output}'", context={"cells": len(summary.cells)})
        else:
            sys.stdout.buffer.write(emit(summary, cfg.format))
            sys.stdout.flush()
        return summary
