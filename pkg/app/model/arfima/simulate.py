from __future__ import annotations

from functools import lru_cache

import numpy as np

from app.base.errors import DomainError
from app.model.arfima.autocov import autocovariances
from app.model.arfima.levinson import DurbinLevinson, durbin_levinson
from app.model.arfima.model import ArfimaModel


# each entry holds a dense n×n factor
@lru_cache(maxsize=2)
def innovation_factor(
    model: ArfimaModel,
    n: int,
) -> DurbinLevinson:
    """Durbin-Levinson factor of the n×n autocovariance matrix, cached per model."""
    return durbin_levinson(autocovariances(model, n - 1))


def simulate(
    model: ArfimaModel,
    n: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """
    One exact Gaussian draw of length n with mean μ.

    n iid N(0,1) draws are coloured by the cached prediction-error factor,
    so a given generator state always produces the same series. White noise
    skips the factorisation (every prediction coefficient is zero).
    """
    if int(n) != n or n < 2:
        msg = f"simulate needs n >= 2, got {n!r}."
        raise DomainError(msg)
    z = rng.standard_normal(int(n))
    if model.is_white_noise():
        return model.mu + np.sqrt(model.sigma2) * z
    return model.mu + innovation_factor(model, int(n)).colour(z)
