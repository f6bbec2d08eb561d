from app.model.specfun.dirichlet import dirichlet_kernel, dirichlet_kernel_abs2
from app.model.specfun.gammafun import digamma, gamma_ratio_log
from app.model.specfun.logcov import (
    LogCovTable,
    LogCovValue,
    SeriesControl,
    log_periodogram_cov,
    log_periodogram_cov_mc,
    log_periodogram_cov_table,
)

__all__ = [
    "LogCovTable",
    "LogCovValue",
    "SeriesControl",
    "digamma",
    "dirichlet_kernel",
    "dirichlet_kernel_abs2",
    "gamma_ratio_log",
    "log_periodogram_cov",
    "log_periodogram_cov_mc",
    "log_periodogram_cov_table",
]
