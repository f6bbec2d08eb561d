from __future__ import annotations

import argparse
from typing import Any, Sequence

from xlog.format import (
    ColorText,
    ColorTree,
    Text,
    Tree,
)

from app.base.component import Component
from app.interface.constants import CONSTANTS, VARIABLES
from app.interface.payload import Payload
from app.model.harness.config import OUTPUT_FORMATS
from app.model.harness.estimators import EstimatorName
from app.variable.setting import Setting
from app.work.estimate import EstimateWork
from app.work.montecarlo import MonteCarloWork
from app.work.simulate import SimulateWork


def _float_list(string: str) -> list[float]:
    try:
        return [float(item) for item in string.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {string!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacklpr",
        description="Jackknife log-periodogram estimation of the memory parameter d.",
    )
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default: JLP_THREADS)")
    actions = parser.add_subparsers(dest="action", required=True)

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--d", type=float, default=None, help="memory parameter")
    model.add_argument(
        "--phi",
        type=_float_list,
        default=None,
        help="AR coefficients of (1 + phi B), comma-separated; (1 - 0.4B) is --phi=-0.4",
    )
    model.add_argument("--theta", type=_float_list, default=None, help="MA coefficients of (1 + theta B)")

    simulate = actions.add_parser("simulate", parents=[model], help="draw one ARFIMA series")
    simulate.add_argument("--sigma2", type=float, default=None, help="innovation variance")
    simulate.add_argument("--mu", type=float, default=None, help="process mean")
    simulate.add_argument("--n", type=int, required=True, help="sample length")
    simulate.add_argument("--seed", type=int, default=None, help="seed (default: JLP_SEED)")
    simulate.add_argument("--out", default=None, help="output file, one value per line (default: stdout)")

    estimate = actions.add_parser("estimate", parents=[model], help="estimate d on a series")
    estimate.add_argument("--input", required=True, help="one value per line; optional header; CSV first column")
    estimate.add_argument(
        "--estimator",
        required=True,
        choices=[e.value for e in EstimatorName],
    )
    estimate.add_argument("--alpha", type=float, default=None, help="bandwidth exponent")
    estimate.add_argument("--m", type=int, default=None, help="jackknife sub-sample count (default: 2)")
    estimate.add_argument("--scheme", default=None, help="NO or MB (default: NO)")
    estimate.add_argument("--p", type=int, default=None, help="fitted AR order without a model")
    estimate.add_argument("--q", type=int, default=None, help="fitted MA order without a model")
    estimate.add_argument("--tau", type=float, default=None, help="feasible iteration tolerance")
    estimate.add_argument("--max-iter", type=int, default=None, help="feasible iteration limit")

    mc = actions.add_parser("mc", help="run a Monte Carlo experiment")
    mc.add_argument("--config", required=True, help="JSON experiment configuration")
    mc.add_argument("--out", default=None, help="overrides the configured output path")
    mc.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    return parser


class Interface(Component):
    def __init__(
        self,
        argv: Sequence[str] | None = None,
    ) -> None:
        super().__init__(
            name=f"{self.__class__.__name__}",
            level="INFO",
            logformat=Text(),
            loggroup=True,
        )
        self.args: dict[str, Any] = vars(build_parser().parse_args(argv))
        self.setup()
        self.debug(f"Initialised module '{self.name}' OK.")

    def setup(self) -> None:
        # Initialize settings
        self.setting = Setting(
            parent=self,
            variables=VARIABLES,
            constants=CONSTANTS,
        )

        # Update log level from settings
        level = self.setting.get("JLP_APP_LEVEL", None)
        if level:
            self.level = level.upper()
            self.logstream.set_level(self.level)
            self.debug(f"POST_RUN: APP_LEVEL set to '{self.level}'.")

        # Update log format from settings
        format = self.setting.get("JLP_LOG_FORMAT", None)
        if format:
            if format.upper() == "TREE":
                self.logformat = Tree()
            elif format.upper() == "COLORTREE":
                self.logformat = ColorTree()
            elif format.upper() == "COLORTEXT":
                self.logformat = ColorText()
            else:
                self.logformat = Text()
            self.logstream.set_format(self.logformat)
            self.debug(f"POST_RUN: LOG_FORMAT set to '{format}'.")

    def run(self) -> Any:
        self.payload = Payload(
            parent=self,
            data={**self.setting.context, **self.args},
        )
        action = self.payload.get("work.action")
        self.info(f"Executing action '{action}'", context={"fingerprint": self.payload.fingerprint()})
        if action == "simulate":
            work = SimulateWork(parent=self, payload=self.payload)
        elif action == "estimate":
            work = EstimateWork(parent=self, payload=self.payload)
        else:
            work = MonteCarloWork(parent=self, payload=self.payload)
        return work.run()
