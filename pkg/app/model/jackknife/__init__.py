from app.model.jackknife.covariance import (
    CovarianceBundle,
    CovarianceEngine,
    clip_correlation,
    compute_covariances,
    estimator_covariances,
    periodogram_correlation,
)
from app.model.jackknife.estimator import (
    jackknife_estimate,
    jackknife_theoretical_bias,
    jackknife_theoretical_variance,
)
from app.model.jackknife.feasible import (
    FeasibleJackknife,
    FeasibleResult,
    IterationConfig,
    IterationRecord,
    feasible_jackknife,
)
from app.model.jackknife.plan import SubsamplePlan, SubsampleScheme, subsample
from app.model.jackknife.weights import (
    BiasFactors,
    JackknifeWeights,
    WeightProvenance,
    bordered_hessian_minors,
    chambers_weights,
    kkt_matrix,
    optimal_weights,
)

__all__ = [
    "BiasFactors",
    "CovarianceBundle",
    "CovarianceEngine",
    "FeasibleJackknife",
    "FeasibleResult",
    "IterationConfig",
    "IterationRecord",
    "JackknifeWeights",
    "SubsamplePlan",
    "SubsampleScheme",
    "WeightProvenance",
    "bordered_hessian_minors",
    "chambers_weights",
    "clip_correlation",
    "compute_covariances",
    "estimator_covariances",
    "feasible_jackknife",
    "jackknife_estimate",
    "jackknife_theoretical_bias",
    "jackknife_theoretical_variance",
    "kkt_matrix",
    "optimal_weights",
    "periodogram_correlation",
]
