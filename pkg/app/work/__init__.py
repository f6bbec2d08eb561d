from app.work.estimate import EstimateWork, read_series
from app.work.montecarlo import MonteCarloWork
from app.work.simulate import SimulateWork, model_from_payload

__all__ = [
    "EstimateWork",
    "MonteCarloWork",
    "SimulateWork",
    "model_from_payload",
    "read_series",
]
