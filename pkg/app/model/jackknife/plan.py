from __future__ import annotations

from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from app.base.errors import DomainError


class SubsampleScheme(str, Enum):
    """
    Sub-sampling schemes of the jackknife.

    Attrs:
        NON_OVERLAPPING: m consecutive disjoint blocks of length l = n/m.
        MOVING_BLOCK: m windows of length l starting at observations 1..m.

    Methods:
        from_str(string): Parse scheme from its name or short code (NO / MB).
        from_any(value): Resolve scheme from supported inputs.

    Example:
    ```python
        scheme = SubsampleScheme.from_str("mb")
        assert scheme == SubsampleScheme.MOVING_BLOCK
        assert scheme.code == "MB"
    ```
    """

    NON_OVERLAPPING = "non-overlapping"
    MOVING_BLOCK = "moving-block"

    @property
    def code(self) -> str:
        return "NO" if self is SubsampleScheme.NON_OVERLAPPING else "MB"

    @classmethod
    def from_str(cls, string: str) -> SubsampleScheme:
        token = string.strip().lower().replace("_", "-")
        for member in cls:
            if token in (member.value, member.code.lower()):
                return member
        msg = f"Unknown sub-sampling scheme {string!r}; expected one of NO, MB."
        raise DomainError(msg)

    @classmethod
    def from_any(cls, value: Any) -> SubsampleScheme:
        if isinstance(value, SubsampleScheme):
            return value
        if isinstance(value, str):
            return cls.from_str(value)
        msg = f"Cannot resolve a sub-sampling scheme from {value!r}."
        raise DomainError(msg)

    def __str__(self) -> str:
        return self.code

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}.{self.name}"

    def __eq__(self, other) -> bool:
        if isinstance(other, str) and not isinstance(other, SubsampleScheme):
            token = other.strip().lower()
            return token in (self.value, self.code.lower())
        return super().__eq__(other)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return super().__hash__()


class SubsamplePlan:
    """
    Description:
    - How a series of length n is split into m sub-samples of length l = n/m
    - Offsets are 0-based start indices: (i-1)l for non-overlapping blocks,
      i-1 for moving blocks

    Attrs:
    - n, m, l: lengths, n = m·l exactly
    - scheme: SubsampleScheme
    - offsets: tuple of m start indices

    Example:
    ```python
    plan = SubsamplePlan(n=8, m=2, scheme="MB")
    plan.offsets            # (0, 1)
    plan.split(range(1, 9)) # [array([1., 2., 3., 4.]), array([2., 3., 4., 5.])]
    ```
    """

    def __init__(
        self,
        n: int,
        m: int,
        scheme: SubsampleScheme | str = SubsampleScheme.NON_OVERLAPPING,
    ) -> None:
        self.m: int = self._resolve_m(m)
        self.n: int = self._resolve_n(n)
        self.scheme: SubsampleScheme = SubsampleScheme.from_any(scheme)
        self.l: int = self.n // self.m
        self.offsets: tuple[int, ...] = self._resolve_offsets()

    def _resolve_m(
        self,
        m: int,
    ) -> int:
        if int(m) != m or m < 2:
            msg = f"Sub-sample count m must be an integer >= 2, got {m!r}."
            raise DomainError(msg)
        return int(m)

    def _resolve_n(
        self,
        n: int,
    ) -> int:
        if int(n) != n or n < 2 * self.m:
            msg = f"Sample size must be an integer >= 2m = {2 * self.m}, got {n!r}."
            raise DomainError(msg)
        if n % self.m:
            msg = f"Sample size n = {n} is not divisible by m = {self.m}."
            raise DomainError(msg, diagnostics={"n": n, "m": self.m})
        return int(n)

    def _resolve_offsets(self) -> tuple[int, ...]:
        if self.scheme is SubsampleScheme.NON_OVERLAPPING:
            return tuple(i * self.l for i in range(self.m))
        return tuple(range(self.m))

    def split(
        self,
        series: ArrayLike,
    ) -> list[np.ndarray]:
        y = np.asarray(series, dtype=float)
        if y.shape != (self.n,):
            msg = f"Series length {y.size} does not match the plan length n = {self.n}."
            raise DomainError(msg, diagnostics={"length": y.size, "n": self.n})
        return [y[start : start + self.l] for start in self.offsets]

    def describe(self) -> dict[str, Any]:
        return {"n": self.n, "m": self.m, "l": self.l, "scheme": str(self.scheme)}

    def _key(self) -> tuple:
        return (self.n, self.m, self.scheme.value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsamplePlan):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"SubsamplePlan(n={self.n}, m={self.m}, scheme={self.scheme!r})"


def subsample(
    series: ArrayLike,
    plan: SubsamplePlan,
) -> list[np.ndarray]:
    return plan.split(series)
