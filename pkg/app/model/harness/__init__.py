from app.model.harness.config import CATALOGUE, ExperimentConfig
from app.model.harness.design import table_models
from app.model.harness.emit import CSV_COLUMNS, McRow, emit, parse, summary_rows, write
from app.model.harness.estimators import EstimatorName, Knowledge, KnowledgeKind
from app.model.harness.replication import (
    ReplicationContext,
    ReplicationRecord,
    replication_rng,
    run_replication,
)
from app.model.harness.runner import ExperimentRunner, run_experiment
from app.model.harness.summary import McCell, McSummary, cell_moments, summarise

__all__ = [
    "CATALOGUE",
    "CSV_COLUMNS",
    "EstimatorName",
    "ExperimentConfig",
    "ExperimentRunner",
    "Knowledge",
    "KnowledgeKind",
    "McCell",
    "McRow",
    "McSummary",
    "ReplicationContext",
    "ReplicationRecord",
    "cell_moments",
    "emit",
    "parse",
    "replication_rng",
    "run_experiment",
    "run_replication",
    "summarise",
    "summary_rows",
    "table_models",
    "write",
]
