from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Any

from app.base.errors import ConfigError
from app.model.arfima.model import ArfimaModel


class EstimatorName(str, Enum):
    """
    Estimators the harness can run on a draw.

    Attrs:
        LPR: log-periodogram regression
        JACK_OPT: optimal jackknife (true or first-pass estimated weights)
        JACK_CHAMBERS: closed-form jackknife weights
        JACK_FEASIBLE: feasible jackknife iterated to convergence
        GS: weighted-average GS estimator
        MLE: exact Gaussian maximum likelihood
        PW: pre-whitened fractional least squares

    Example:
    ```python
        EstimatorName.from_str("jack_opt")      # EstimatorName.JACK_OPT
        EstimatorName.JACK_OPT.is_jackknife()   # True
    ```
    """

    LPR = "lpr"
    JACK_OPT = "jack-opt"
    JACK_CHAMBERS = "jack-chambers"
    JACK_FEASIBLE = "jack-feasible"
    GS = "gs"
    MLE = "mle"
    PW = "pw"

    @classmethod
    def from_str(
        cls,
        string: str,
    ) -> EstimatorName:
        key = str(string).strip().lower().replace("_", "-")
        for item in cls:
            if item.value == key:
                return item
        msg = f"Unknown estimator {string!r}; choose from {[item.value for item in cls]}."
        raise ConfigError(msg)

    @classmethod
    def from_any(
        cls,
        value: Any,
    ) -> EstimatorName:
        if isinstance(value, EstimatorName):
            return value
        return cls.from_str(value)

    def is_jackknife(self) -> bool:
        return self.value.startswith("jack-")

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}.{self.name}"

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            return self.value == other.strip().lower().replace("_", "-")
        return super().__eq__(other)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return super().__hash__()


class KnowledgeKind(str, Enum):
    TRUE_PARAMS = "true-params"
    ESTIMATED = "estimated"
    MISSPECIFIED = "misspecified"

    def __str__(self) -> str:
        return self.value


_MISSPECIFIED = re.compile(r"^misspecified\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)$")


@dataclass(frozen=True)
class Knowledge:
    """
    What the estimators are told about the short-memory part.

    ``true-params`` hands the true ARMA coefficients to jack-opt, MLE and PW;
    ``estimated`` fits them with the true orders; ``misspecified(p,q)`` fits
    them with the given orders. LPR, GS and jack-chambers ignore it.
    """

    kind: KnowledgeKind = KnowledgeKind.TRUE_PARAMS
    p: int | None = None
    q: int | None = None

    @classmethod
    def from_str(
        cls,
        string: str,
        p: int | None = None,
        q: int | None = None,
    ) -> Knowledge:
        text = str(string).strip().lower().replace("_", "-")
        match = _MISSPECIFIED.match(text)
        if match:
            return cls(KnowledgeKind.MISSPECIFIED, int(match.group(1)), int(match.group(2)))
        for kind in KnowledgeKind:
            if kind.value == text:
                if kind is KnowledgeKind.MISSPECIFIED and (p is None or q is None):
                    msg = "Knowledge 'misspecified' needs fitted orders p and q."
                    raise ConfigError(msg)
                if kind is KnowledgeKind.MISSPECIFIED:
                    return cls(kind, int(p), int(q))
                return cls(kind)
        msg = f"Unknown knowledge {string!r}; use true-params, estimated or misspecified(p,q)."
        raise ConfigError(msg)

    def __post_init__(self) -> None:
        if self.kind is KnowledgeKind.MISSPECIFIED:
            if self.p is None or self.q is None or self.p < 0 or self.q < 0:
                msg = f"Misspecified knowledge needs orders p, q >= 0, got p={self.p!r}, q={self.q!r}."
                raise ConfigError(msg)

    def is_true(self) -> bool:
        return self.kind is KnowledgeKind.TRUE_PARAMS

    def orders(
        self,
        model: ArfimaModel,
    ) -> tuple[int, int]:
        """ARMA orders fitted under this knowledge."""
        if self.kind is KnowledgeKind.MISSPECIFIED:
            return int(self.p), int(self.q)
        return len(model.ar), len(model.ma)

    def __str__(self) -> str:
        if self.kind is KnowledgeKind.MISSPECIFIED:
            return f"misspecified({self.p},{self.q})"
        return self.kind.value
