from __future__ import annotations

import math
from decimal import Decimal, localcontext

import numpy as np

from app.base.errors import DomainError

DEFAULT_ALPHA = 0.65
# Digits used to evaluate n^α away from the integer boundaries
_PRECISION = 50


def _power(
    base: int,
    exponent: Decimal,
) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = _PRECISION
        return Decimal(base) ** exponent


def bandwidth(
    n: int,
    alpha: float = DEFAULT_ALPHA,
) -> int:
    """
    Number of low Fourier frequencies N = ⌊n^α⌋.

    The power is taken in 50-digit decimal arithmetic on ``str(alpha)``, then
    checked against k^{1/α} ≤ n < (k+1)^{1/α} so that n = k^{1/α} exactly
    never rounds down.

    Example:
    ```python
        bandwidth(96)     # 19
        bandwidth(576)    # 62
    ```
    """
    if int(n) != n or n < 4:
        msg = f"bandwidth needs an integer sample size n >= 4, got {n!r}."
        raise DomainError(msg)
    if not 0.0 < float(alpha) < 1.0:
        msg = f"bandwidth exponent alpha must lie in (0, 1), got {alpha!r}."
        raise DomainError(msg)
    n = int(n)
    exponent = Decimal(str(float(alpha)))
    with localcontext() as ctx:
        ctx.prec = _PRECISION
        inverse = 1 / exponent
    k = int(math.floor(_power(n, exponent)))
    while k > 0 and _power(k, inverse) > n:
        k -= 1
    while _power(k + 1, inverse) <= n:
        k += 1
    if k < 2:
        msg = f"Bandwidth {k} = floor({n}^{alpha}) leaves fewer than 2 regression points."
        raise DomainError(msg, diagnostics={"n": n, "alpha": alpha, "bandwidth": k})
    return k


class SpectralGrid:
    """
    Description:
    - Low Fourier frequencies λ_j = 2πj/n, j = 1..N, of a sample of length n
    - N is ⌊n^α⌋ unless given explicitly (the GS estimator uses ⌊qN⌋)
    - A sub-sample of length l = n/m uses SpectralGrid(l, alpha); its
      frequencies are μ_j = mλ_j

    Attrs:
    - n: sample length
    - alpha: bandwidth exponent, None for an explicit bandwidth
    - N: number of frequencies, 1 <= N < n/2
    - lambdas: read-only array of the N frequencies

    Example:
    ```python
    from app.model.spectral import SpectralGrid

    grid = SpectralGrid(576)
    grid.N                      # 62
    SpectralGrid.from_bandwidth(576, 93).N   # 93
    ```
    """

    @classmethod
    def from_bandwidth(
        cls,
        n: int,
        N: int,
    ) -> SpectralGrid:
        return cls(n=n, alpha=None, N=N)

    def __init__(
        self,
        n: int,
        alpha: float | None = DEFAULT_ALPHA,
        N: int | None = None,
    ) -> None:
        self.n: int = self._resolve_n(n)
        self.alpha: float | None = None if alpha is None else float(alpha)
        self.N: int = self._resolve_N(N)
        self.lambdas: np.ndarray = self._resolve_lambdas()

    def _resolve_n(
        self,
        n: int,
    ) -> int:
        if int(n) != n or n < 4:
            msg = f"SpectralGrid needs an integer sample size n >= 4, got {n!r}."
            raise DomainError(msg)
        return int(n)

    def _resolve_N(
        self,
        N: int | None,
    ) -> int:
        if N is None:
            if self.alpha is None:
                msg = "SpectralGrid needs either alpha or an explicit bandwidth N."
                raise DomainError(msg)
            N = bandwidth(self.n, self.alpha)
        if int(N) != N or not 1 <= N < self.n / 2:
            msg = f"Bandwidth N must satisfy 1 <= N < n/2 = {self.n / 2}, got {N!r}."
            raise DomainError(msg, diagnostics={"n": self.n, "bandwidth": N})
        return int(N)

    def _resolve_lambdas(self) -> np.ndarray:
        lambdas = 2.0 * np.pi * np.arange(1, self.N + 1) / self.n
        lambdas.setflags(write=False)
        return lambdas

    def _key(self) -> tuple:
        return (self.n, self.N)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralGrid):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"SpectralGrid(n={self.n}, alpha={self.alpha!r}, N={self.N})"
