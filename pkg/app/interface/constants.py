from __future__ import annotations

from app.variable.constant import Constant
from app.variable.varkind import VarKind

# Environment definitions are resolved when Interface builds its Setting,
# so a malformed value surfaces as a ConfigError inside main().
VARIABLES = [
    {
        "name": "JLP_APP_LEVEL",
        "kind": VarKind.STRING,
        "default": "INFO",
        "choice": ["DEBUG", "INFO", "WARNING", "ERROR"],
        "description": "APP LOG LEVEL, choose from: [DEBUG, INFO, WARNING, ERROR]",
    },
    {
        "name": "JLP_LOG_FORMAT",
        "kind": VarKind.STRING,
        "default": "TEXT",
        "choice": ["TREE", "TEXT", "COLORTREE", "COLORTEXT"],
        "description": "APP LOG FORMAT, choose from: [TREE, TEXT, COLORTREE, COLORTEXT]",
    },
    {
        "name": "JLP_THREADS",
        "kind": VarKind.INTEGER,
        "default": 1,
        "description": "Default worker threads for Monte Carlo replications",
    },
    {
        "name": "JLP_SEED",
        "kind": VarKind.INTEGER,
        "default": 0,
        "description": "Default seed of the simulate action",
    },
]
CONSTANTS = [
    Constant(
        name="JLP_APP_NAME",
        kind=VarKind.STRING,
        value="jacklpr",
        description="Application name",
    ),
    Constant(
        name="JLP_DEFAULT_ALPHA",
        kind=VarKind.FLOAT,
        value=0.65,
        description="Default bandwidth exponent, N = floor(n^alpha)",
    ),
    Constant(
        name="JLP_DEFAULT_REPS",
        kind=VarKind.INTEGER,
        value=5000,
        description="Default Monte Carlo replication count",
    ),
]
