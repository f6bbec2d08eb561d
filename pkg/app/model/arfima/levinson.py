from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from app.base.errors import DomainError, NumericalError


@dataclass(frozen=True)
class DurbinLevinson:
    """
    Prediction-error factorisation of a stationary Toeplitz covariance.

    ``transform`` is unit lower triangular with ``transform @ x`` the one-step
    prediction errors of x; ``variances`` are their variances, so that
    Σ = transform⁻¹ diag(variances) transform⁻ᵀ.
    """

    transform: np.ndarray
    variances: np.ndarray

    @property
    def n(self) -> int:
        return int(self.variances.size)

    def innovations(
        self,
        x: ArrayLike,
    ) -> np.ndarray:
        return self.transform @ np.asarray(x, dtype=float)

    def quadratic_form(
        self,
        x: ArrayLike,
    ) -> float:
        """xᵀ Σ⁻¹ x."""
        e = self.innovations(x)
        return float(np.sum(e * e / self.variances))

    def log_det(self) -> float:
        return float(np.sum(np.log(self.variances)))

    def colour(
        self,
        z: ArrayLike,
    ) -> np.ndarray:
        """Map iid N(0,1) draws to a draw with covariance Σ."""
        scaled = np.sqrt(self.variances) * np.asarray(z, dtype=float)
        return linalg.solve_triangular(self.transform, scaled, lower=True, unit_diagonal=True, check_finite=False)


def durbin_levinson(
    gamma: ArrayLike,
) -> DurbinLevinson:
    """
    Durbin-Levinson recursion on autocovariances γ_0..γ_{n-1}.

    Raises NumericalError naming the first lag at which the sequence stops
    being positive definite.
    """
    g = np.asarray(gamma, dtype=float)
    n = g.size
    if n < 1 or g[0] <= 0.0 or not np.all(np.isfinite(g)):
        msg = "Autocovariances must be finite with gamma_0 > 0."
        raise DomainError(msg)

    transform = np.eye(n)
    variances = np.empty(n)
    variances[0] = g[0]
    phi = np.zeros(0)
    for t in range(1, n):
        kappa = (g[t] - phi @ g[t - 1 : 0 : -1]) / variances[t - 1]
        variance = variances[t - 1] * (1.0 - kappa * kappa)
        if not np.isfinite(kappa) or abs(kappa) >= 1.0 or variance <= 0.0:
            msg = f"Autocovariance sequence is not positive definite at lag {t}."
            raise NumericalError(msg, diagnostics={"lag": t, "partial_autocorrelation": float(kappa)})
        phi = np.concatenate([phi - kappa * phi[::-1], [kappa]])
        variances[t] = variance
        transform[t, :t] = -phi[::-1]
    return DurbinLevinson(transform=transform, variances=variances)
