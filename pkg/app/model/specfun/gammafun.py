from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from app.base.errors import DomainError


def digamma(
    x: ArrayLike,
) -> float | np.ndarray:
    """
    Digamma function Ψ(x) on the positive half-line.

    Poles at the non-positive integers are never needed here, so the whole
    non-positive axis is rejected.

    Example:
    ```python
        digamma(1.0)            # -0.5772156649015329
        digamma([0.5, 2.5])     # array([-1.96351003,  0.70315664])
    ```
    """
    values = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
        msg = f"digamma is defined here for finite x > 0 only, got {x!r}."
        raise DomainError(msg)
    result = special.digamma(values)
    if result.ndim == 0:
        return float(result)
    return result


def gamma_ratio_log(
    a: float,
    k: int,
) -> float:
    """log(Γ(a+k)/Γ(a)) as a sum of logs, without evaluating large gammas."""
    if not np.isfinite(a) or a <= 0.0:
        msg = f"gamma_ratio_log requires a > 0, got {a!r}."
        raise DomainError(msg)
    if int(k) != k or k < 0:
        msg = f"gamma_ratio_log requires an integer k >= 0, got {k!r}."
        raise DomainError(msg)
    if k == 0:
        return 0.0
    return float(np.sum(np.log(a + np.arange(int(k), dtype=float))))


def gamma_ratio_log_table(
    a: float,
    terms: int,
) -> np.ndarray:
    """Cumulative table of log(Γ(a+k)/Γ(a)) for k = 1..terms."""
    return np.cumsum(np.log(a + np.arange(terms, dtype=float)))
