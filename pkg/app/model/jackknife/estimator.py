from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from app.base.errors import DomainError, JackLprError
from app.model.arfima.model import ArfimaModel
from app.model.arfima.spectrum import fstar_curvature_ratio
from app.model.jackknife.covariance import CovarianceBundle
from app.model.jackknife.plan import SubsamplePlan
from app.model.jackknife.weights import JackknifeWeights
from app.model.lpr.estimator import BIAS_CONSTANT, lpr_estimate
from app.model.spectral.grid import DEFAULT_ALPHA


def _check_weights(
    plan: SubsamplePlan,
    weights: JackknifeWeights,
) -> None:
    factors = weights.factors
    if (factors.n, factors.m) != (plan.n, plan.m):
        msg = f"Weights built for n={factors.n}, m={factors.m} do not match {plan!r}."
        raise DomainError(msg)


def jackknife_estimate(
    series: ArrayLike,
    plan: SubsamplePlan,
    weights: JackknifeWeights,
    alpha: float = DEFAULT_ALPHA,
) -> float:
    """
    d̂_J = w_n d̂_n - Σ_i w_i d̂_i.

    d̂_n uses N_n = ⌊n^α⌋ on the full series and each d̂_i uses N_l = ⌊l^α⌋
    on sub-sample i. A failing sub-sample is re-raised with its 1-based index
    in the diagnostics.
    """
    _check_weights(plan, weights)
    y = np.asarray(series, dtype=float)
    full = lpr_estimate(y, alpha).d
    subs = np.empty(plan.m)
    for i, block in enumerate(plan.split(y)):
        try:
            subs[i] = lpr_estimate(block, alpha).d
        except JackLprError as e:
            msg = f"Sub-sample {i + 1} of {plan.m}: {e.message}"
            raise type(e)(msg, diagnostics={**e.diagnostics, "subsample": i + 1}) from e
    return float(weights.w_n * full - np.dot(weights.w_sub, subs))


def jackknife_theoretical_variance(
    weights: JackknifeWeights,
    cov: CovarianceBundle,
) -> float:
    """
    π²w_n²/(24N_n) + π²Σw_i²/(24N_l) + 2Σ_{i<j} w_i w_j c†_ij - 2w_n Σ w_i c*_i.

    This is the objective the optimal weights minimise.
    """
    if cov.plan.m != weights.m:
        msg = f"Covariance bundle has m = {cov.plan.m}, weights have m = {weights.m}."
        raise DomainError(msg)
    factors = weights.factors
    w = weights.w_sub
    upper = np.triu(cov.c_dagger, k=1)
    return float(
        np.pi**2 * weights.w_n**2 / (24.0 * factors.N_n)
        + np.pi**2 * np.dot(w, w) / (24.0 * factors.N_l)
        + 2.0 * w @ upper @ w
        - 2.0 * weights.w_n * np.dot(w, cov.c_star)
    )


def jackknife_theoretical_bias(
    model: ArfimaModel,
    weights: JackknifeWeights,
) -> float:
    """-(2π²/9)(f*''(0)/f*(0))[(N_n²/n²)w_n - m²(N_l²/l²)Σw_i]."""
    factors = weights.factors
    combination = factors.a * weights.w_n - factors.b * float(np.sum(weights.w_sub))
    return float(BIAS_CONSTANT * fstar_curvature_ratio(model) * combination)
