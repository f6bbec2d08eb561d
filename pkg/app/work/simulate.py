from __future__ import annotations

import sys
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np

from app.base.component import Component
from app.base.errors import ConfigError, DomainError
from app.model.arfima.model import ArfimaModel
from app.model.arfima.simulate import simulate
from app.model.harness.replication import replication_rng

if TYPE_CHECKING:
    from app.interface.payload import Payload


def model_from_payload(payload: Payload) -> ArfimaModel:
    """ARFIMA model named by the ``work.model`` section; unset values take the model defaults."""
    values = {k: v for k, v in payload.get("work.model", {}).items() if k != "given" and v is not None}
    try:
        return ArfimaModel(
            d=values.get("d", 0.0),
            ar=values.get("phi", ()),
            ma=values.get("theta", ()),
            sigma2=values.get("sigma2", 1.0),
            mu=values.get("mu", 0.0),
        )
    except DomainError as e:
        raise ConfigError(f"Invalid model arguments: {e.message}", diagnostics=e.diagnostics) from e


class SimulateWork(Component):
    """Draws one series from the requested model and writes it one value per line."""

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

    def run(self) -> np.ndarray:
        model = model_from_payload(self.payload)
        n = self.payload.require("work.n")
        seed = int(self.payload.get("work.seed", 0))
        output = self.payload.get("io.output")
        self.info(
            f"Simulating {model.label()} of length {n}",
            context={"model": model.describe(), "seed": seed},
        )
        y = simulate(model, n, replication_rng(seed, 0))
        if output:
            path = Path(output)
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                np.savetxt(path, y, fmt="%.17g")
            except OSError as e:
                raise self.fail(f"Cannot write series to {str(path)!r}: {e}", ConfigError)
            self.info(f"Series written to '{path}'")
        else:
            np.savetxt(sys.stdout, y, fmt="%.17g")
        return y
