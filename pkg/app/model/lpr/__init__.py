from app.model.lpr.estimator import (
    EULER_CONSTANT,
    LprEstimate,
    lpr_estimate,
    lpr_slope,
    lpr_theoretical_bias,
    lpr_theoretical_variance,
)

__all__ = [
    "EULER_CONSTANT",
    "LprEstimate",
    "lpr_estimate",
    "lpr_slope",
    "lpr_theoretical_bias",
    "lpr_theoretical_variance",
]
