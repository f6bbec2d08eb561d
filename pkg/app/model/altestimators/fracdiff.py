from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import signal

from app.base.errors import DomainError


def fracdiff_weights(
    d: float,
    length: int,
) -> np.ndarray:
    """Coefficients of (1-B)^d: π_0 = 1, π_k = π_{k-1}(k-1-d)/k."""
    if int(length) != length or length < 1:
        msg = f"Filter length must be a positive integer, got {length!r}."
        raise DomainError(msg)
    k = np.arange(1, int(length), dtype=float)
    return np.concatenate([[1.0], np.cumprod((k - 1.0 - d) / k)])


def fracdiff(
    series: ArrayLike,
    d: float,
) -> np.ndarray:
    """
    (1-B)^d applied to the series with the binomial filter truncated at the
    series length, so output t uses every observation up to t.
    """
    y = np.asarray(series, dtype=float)
    if y.ndim != 1 or y.size < 1 or not np.all(np.isfinite(y)):
        msg = "fracdiff needs a non-empty one-dimensional finite series."
        raise DomainError(msg)
    if not np.isfinite(d):
        msg = f"Differencing order must be finite, got {d!r}."
        raise DomainError(msg)
    return signal.lfilter(fracdiff_weights(d, y.size), [1.0], y)
