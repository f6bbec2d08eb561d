from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any

from app.base.errors import ConfigError
from app.model.harness.summary import McSummary

CSV_COLUMNS = (
    "model_label",
    "phi",
    "theta",
    "d0",
    "n",
    "alpha",
    "scheme",
    "m",
    "estimator",
    "knowledge",
    "reps",
    "bias",
    "bias_mc_se",
    "rmse",
    "failures",
    "seed",
)


def _g6(value: float) -> str:
    return f"{value:.6g}"


def _round6(value: float) -> float:
    return float(_g6(value))


def _moment(value: float) -> float | None:
    # undefined moments (too few successful draws) are written as empty / null
    return None if math.isnan(value) else _round6(value)


def _optional_float(raw: Any) -> float | None:
    if raw in ("", None):
        return None
    return float(raw)


def _coefficients(values: tuple[float, ...]) -> str:
    return ";".join(_g6(v) for v in values)


@dataclass(frozen=True)
class McRow:
    """One result line; floats are held at the 6 significant digits written out, undefined moments as None."""

    model_label: str
    phi: str
    theta: str
    d0: float
    n: int
    alpha: float
    scheme: str
    m: int | None
    estimator: str
    knowledge: str
    reps: int
    bias: float | None
    bias_mc_se: float | None
    rmse: float | None
    failures: int
    seed: int

    def formatted(self) -> dict[str, str]:
        result = {}
        for item in fields(self):
            value = getattr(self, item.name)
            if value is None:
                result[item.name] = ""
            elif isinstance(value, float):
                result[item.name] = _g6(value)
            else:
                result[item.name] = str(value)
        return result

    @classmethod
    def from_strings(
        cls,
        data: dict[str, Any],
    ) -> McRow:
        try:
            return cls(
                model_label=str(data["model_label"]),
                phi=str(data["phi"]),
                theta=str(data["theta"]),
                d0=float(data["d0"]),
                n=int(data["n"]),
                alpha=float(data["alpha"]),
                scheme=str(data["scheme"] or ""),
                m=int(data["m"]) if data["m"] not in ("", None) else None,
                estimator=str(data["estimator"]),
                knowledge=str(data["knowledge"]),
                reps=int(data["reps"]),
                bias=_optional_float(data["bias"]),
                bias_mc_se=_optional_float(data["bias_mc_se"]),
                rmse=_optional_float(data["rmse"]),
                failures=int(data["failures"]),
                seed=int(data["seed"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"Malformed result row {data!r}: {e}") from e


def summary_rows(summary: McSummary) -> list[McRow]:
    cfg = summary.cfg
    model = cfg.model
    return [
        McRow(
            model_label=model.label(),
            phi=_coefficients(model.ar),
            theta=_coefficients(model.ma),
            d0=_round6(model.d),
            n=cfg.n,
            alpha=_round6(cfg.alpha),
            scheme=cell.scheme.code if cell.scheme else "",
            m=cell.m,
            estimator=str(cell.estimator),
            knowledge=str(cfg.knowledge),
            reps=cell.reps,
            bias=_moment(cell.bias),
            bias_mc_se=_moment(cell.bias_mc_se),
            rmse=_moment(cell.rmse),
            failures=cell.failures,
            seed=cfg.seed,
        )
        for cell in summary.cells
    ]


def emit(
    summary: McSummary,
    format: str = "csv",
) -> bytes:
    """
    Serialise a summary as CSV (fixed column order) or a JSON list of rows.

    Example:
    ```python
        data = emit(summary, "csv")
        parse(data, "csv") == summary_rows(summary)    # True
    ```
    """
    rows = summary_rows(summary)
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(row.formatted() for row in rows)
        return buffer.getvalue().encode("utf-8")
    if format == "json":
        payload = [asdict(row) for row in rows]
        return (json.dumps(payload, indent=2, allow_nan=False) + "\n").encode("utf-8")
    msg = f"Unknown output format {format!r}; use csv or json."
    raise ConfigError(msg)


def parse(
    data: bytes,
    format: str = "csv",
) -> list[McRow]:
    text = data.decode("utf-8")
    if format == "csv":
        reader = csv.DictReader(io.StringIO(text))
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            msg = f"Unexpected result columns {reader.fieldnames!r}."
            raise ConfigError(msg)
        return [McRow.from_strings(item) for item in reader]
    if format == "json":
        return [McRow.from_strings(item) for item in json.loads(text)]
    msg = f"Unknown output format {format!r}; use csv or json."
    raise ConfigError(msg)


def write(
    summary: McSummary,
    path: str | Path,
    format: str = "csv",
) -> Path:
    path = Path(path)
    data = emit(summary, format)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
    except OSError as e:
        raise OSError(f"Cannot write results to {str(path)!r}: {e.strerror or e}") from e
    return path
