from __future__ import annotations

from app.model.arfima.model import ArfimaModel

SHORT_MEMORY_VALUES = (-0.9, -0.4, 0.4, 0.9)
MEMORY_VALUES = (-0.25, 0.0, 0.25, 0.45)


def table_models() -> list[ArfimaModel]:
    """
    Design grid of the experiments.

    ARFIMA(1,d,0) and ARFIMA(0,d,1) with φ₀, θ₀ ∈ {-0.9, -0.4, 0.4, 0.9} and
    d₀ ∈ {-0.25, 0, 0.25, 0.45}, then the ARFIMA(1,d,1) misspecification
    models with (φ₀, θ₀) from the same set without 0.9.
    """
    models = [ArfimaModel(d=d, ar=[phi]) for phi in SHORT_MEMORY_VALUES for d in MEMORY_VALUES]
    models += [ArfimaModel(d=d, ma=[theta]) for theta in SHORT_MEMORY_VALUES for d in MEMORY_VALUES]
    mixed = [value for value in SHORT_MEMORY_VALUES if value != 0.9]
    models += [
        ArfimaModel(d=d, ar=[phi], ma=[theta])
        for phi in mixed
        for theta in mixed
        for d in MEMORY_VALUES
    ]
    return models
