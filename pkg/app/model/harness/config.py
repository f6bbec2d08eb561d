from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from app.base.component import Component
from app.base.errors import ConfigError, DomainError
from app.model.arfima.model import ArfimaModel
from app.model.harness.estimators import EstimatorName, Knowledge, KnowledgeKind
from app.model.jackknife.plan import SubsamplePlan, SubsampleScheme
from app.model.spectral.grid import DEFAULT_ALPHA, SpectralGrid
from app.variable.setting import Setting
from app.variable.varkind import VarKind

OUTPUT_FORMATS = ("csv", "json")

# Keys of an experiment file; missing keys take the default
CATALOGUE: list[dict[str, Any]] = [
    {"name": "d", "kind": VarKind.FLOAT, "default": 0.0, "description": "memory parameter d0"},
    {"name": "phi", "kind": VarKind.FLOAT_LIST, "default": [], "description": "AR coefficients, (1 + φB) form"},
    {"name": "theta", "kind": VarKind.FLOAT_LIST, "default": [], "description": "MA coefficients, (1 + θB) form"},
    {"name": "sigma2", "kind": VarKind.FLOAT, "default": 1.0, "description": "innovation variance"},
    {"name": "mu", "kind": VarKind.FLOAT, "default": 0.0, "description": "process mean"},
    {"name": "n", "kind": VarKind.INTEGER, "default": 576, "description": "sample length"},
    {"name": "alpha", "kind": VarKind.FLOAT, "default": DEFAULT_ALPHA, "description": "bandwidth exponent"},
    {"name": "m_values", "kind": VarKind.INTEGER_LIST, "default": [2], "description": "sub-sample counts"},
    {"name": "schemes", "kind": VarKind.LIST, "default": ["NO"], "description": "NO and/or MB"},
    {"name": "estimators", "kind": VarKind.LIST, "default": ["lpr"], "description": "estimators to run"},
    {"name": "knowledge", "kind": VarKind.STRING, "default": "true-params", "description": "short-memory knowledge"},
    {"name": "p", "kind": VarKind.INTEGER, "default": None, "description": "fitted AR order (misspecified)"},
    {"name": "q", "kind": VarKind.INTEGER, "default": None, "description": "fitted MA order (misspecified)"},
    {"name": "reps", "kind": VarKind.INTEGER, "default": 5000, "description": "replications"},
    {"name": "seed", "kind": VarKind.INTEGER, "default": 0, "description": "root seed"},
    {"name": "output", "kind": VarKind.STRING, "default": None, "description": "result path, stdout when unset"},
    {"name": "format", "kind": VarKind.STRING, "default": "csv", "choice": list(OUTPUT_FORMATS)},
    {"name": "threads", "kind": VarKind.INTEGER, "default": None, "description": "worker threads"},
    {"name": "gs_delta", "kind": VarKind.FLOAT, "default": None, "description": "GS δ override"},
    {"name": "tau", "kind": VarKind.FLOAT, "default": 1e-4, "description": "feasible iteration tolerance"},
    {"name": "max_iter", "kind": VarKind.INTEGER, "default": 20, "description": "feasible iteration limit"},
]


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Description:
    - One Monte Carlo design: a data-generating model, a sample length and
      the estimators to run on each draw
    - Jackknife estimators run once per (scheme, m) pair
    - Invalid values raise ConfigError naming the key

    Attrs:
    - model: ArfimaModel generating the draws
    - n: sample length, divisible by every m
    - alpha: bandwidth exponent
    - m_values: sub-sample counts
    - schemes: SubsampleScheme values
    - estimators: EstimatorName values, non-empty
    - knowledge: Knowledge
    - reps: replication count
    - seed: root seed of the per-replication streams
    - output: result path, None for stdout
    - format: csv or json
    - threads: worker threads, None defers to JLP_THREADS
    - gs_delta: GS δ override
    - tau, max_iter: feasible iteration stopping rule

    Example:
    ```python
    cfg = ExperimentConfig.from_dict(
        {"phi": [0.4], "n": 576, "estimators": ["lpr", "jack-opt"], "reps": 500}
    )
    cfg.cells()     # [(lpr, None, None), (jack-opt, NO, 2)]
    ```
    """

    model: ArfimaModel = field(default_factory=ArfimaModel)
    n: int = 576
    alpha: float = DEFAULT_ALPHA
    m_values: tuple[int, ...] = (2,)
    schemes: tuple[SubsampleScheme, ...] = (SubsampleScheme.NON_OVERLAPPING,)
    estimators: tuple[EstimatorName, ...] = (EstimatorName.LPR,)
    knowledge: Knowledge = field(default_factory=Knowledge)
    reps: int = 5000
    seed: int = 0
    output: Path | None = None
    format: str = "csv"
    threads: int | None = None
    gs_delta: float | None = None
    tau: float = 1e-4
    max_iter: int = 20

    @classmethod
    def from_dict(
        cls,
        data: dict[str, Any],
        parent: Component | None = None,
    ) -> ExperimentConfig:
        setting = Setting.from_catalogue(CATALOGUE, data, parent=parent)
        values = setting.context
        try:
            model = ArfimaModel(
                d=values["d"],
                ar=values["phi"],
                ma=values["theta"],
                sigma2=values["sigma2"],
                mu=values["mu"],
            )
        except DomainError as e:
            msg = f"Invalid model in configuration: {e.message}"
            raise ConfigError(msg, diagnostics=e.diagnostics) from e
        output = values["output"]
        return cls(
            model=model,
            n=values["n"],
            alpha=values["alpha"],
            m_values=tuple(values["m_values"]),
            schemes=tuple(values["schemes"]),
            estimators=tuple(EstimatorName.from_any(item) for item in values["estimators"]),
            knowledge=Knowledge.from_str(values["knowledge"], values["p"], values["q"]),
            reps=values["reps"],
            seed=values["seed"],
            output=Path(output) if output else None,
            format=values["format"],
            threads=values["threads"],
            gs_delta=values["gs_delta"],
            tau=values["tau"],
            max_iter=values["max_iter"],
        )

    @classmethod
    def from_file(
        cls,
        path: str | Path,
        parent: Component | None = None,
    ) -> ExperimentConfig:
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise ConfigError(f"Cannot read configuration file {str(path)!r}: {e}") from e
        except ValueError as e:
            raise ConfigError(f"Configuration file {str(path)!r} is not valid JSON: {e}") from e
        if not isinstance(data, dict):
            msg = f"Configuration file {str(path)!r} must hold a JSON object."
            raise ConfigError(msg)
        return cls.from_dict(data, parent=parent)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m_values", tuple(int(m) for m in self.m_values))
        try:
            object.__setattr__(self, "schemes", tuple(SubsampleScheme.from_any(s) for s in self.schemes))
        except DomainError as e:
            raise ConfigError(f"Invalid 'schemes': {e.message}") from e
        object.__setattr__(self, "estimators", tuple(EstimatorName.from_any(e) for e in self.estimators))
        if not self.estimators:
            raise ConfigError("At least one estimator is required.")
        if len(set(self.estimators)) != len(self.estimators):
            raise ConfigError(f"Duplicate estimators in {[str(e) for e in self.estimators]}.")
        if int(self.reps) != self.reps or self.reps < 1:
            raise ConfigError(f"'reps' must be >= 1, got {self.reps!r}.")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise ConfigError(f"'seed' must be a 64-bit non-negative integer, got {self.seed!r}.")
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"'format' must be one of {OUTPUT_FORMATS}, got {self.format!r}.")
        if self.threads is not None and self.threads < 1:
            raise ConfigError(f"'threads' must be >= 1, got {self.threads!r}.")
        if not self.tau > 0.0 or self.max_iter < 1:
            raise ConfigError(f"Invalid iteration rule tau={self.tau!r}, max_iter={self.max_iter!r}.")
        try:
            SpectralGrid(self.n, self.alpha)
        except DomainError as e:
            raise ConfigError(f"Invalid 'n' or 'alpha': {e.message}") from e
        if any(e.is_jackknife() for e in self.estimators):
            self._check_plans()

    def _check_plans(self) -> None:
        if not self.m_values or not self.schemes:
            raise ConfigError("Jackknife estimators need non-empty 'm_values' and 'schemes'.")
        for m in self.m_values:
            try:
                plan = SubsamplePlan(self.n, m)
                SpectralGrid(plan.l, self.alpha)
            except DomainError as e:
                raise ConfigError(f"Invalid m = {m} for n = {self.n}: {e.message}", diagnostics={"m": m}) from e

    def cells(self) -> list[tuple[EstimatorName, SubsampleScheme | None, int | None]]:
        """(estimator, scheme, m) for every reported cell, in output order."""
        result: list[tuple[EstimatorName, SubsampleScheme | None, int | None]] = []
        for estimator in self.estimators:
            if estimator.is_jackknife():
                result.extend((estimator, scheme, m) for scheme in self.schemes for m in self.m_values)
            else:
                result.append((estimator, None, None))
        return result

    def plans(self) -> list[SubsamplePlan]:
        return [SubsamplePlan(self.n, m, scheme) for scheme in self.schemes for m in self.m_values]

    def with_overrides(
        self,
        **changes: Any,
    ) -> ExperimentConfig:
        return replace(self, **changes)

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "d": self.model.d,
            "phi": list(self.model.ar),
            "theta": list(self.model.ma),
            "sigma2": self.model.sigma2,
            "mu": self.model.mu,
            "n": self.n,
            "alpha": self.alpha,
            "m_values": list(self.m_values),
            "schemes": [scheme.code for scheme in self.schemes],
            "estimators": [str(e) for e in self.estimators],
            "knowledge": self.knowledge.kind.value,
            "reps": self.reps,
            "seed": self.seed,
            "output": str(self.output) if self.output else None,
            "format": self.format,
            "threads": self.threads,
            "gs_delta": self.gs_delta,
            "tau": self.tau,
            "max_iter": self.max_iter,
        }
        if self.knowledge.kind is KnowledgeKind.MISSPECIFIED:
            result["p"], result["q"] = self.knowledge.p, self.knowledge.q
        return result

    def fingerprint(self) -> str:
        """Short SHA-256 of the design, excluding output and threading settings."""
        data = {k: v for k, v in self.to_dict().items() if k not in ("output", "format", "threads")}
        return hashlib.sha256(json.dumps(data, sort_keys=True).encode()).hexdigest()[:8]
