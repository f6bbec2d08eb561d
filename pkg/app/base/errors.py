from __future__ import annotations

from typing import Any


class JackLprError(Exception):
    """
    Root of the application error hierarchy.

    Attrs:
        diagnostics: Free-form mapping with the numbers that explain the failure
            (condition number, failing lag, iteration count, ...).

    Example:
    ```python
        try:
            optimal_weights(model, plan, alpha=0.65, covariances=bundle)
        except NumericalError as e:
            print(e.diagnostics["condition"])
    ```
    """

    exit_code: int = 1

    def __init__(
        self,
        message: str,
        diagnostics: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.diagnostics: dict[str, Any] = dict(diagnostics or {})

    def describe(self) -> dict[str, Any]:
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "diagnostics": self.diagnostics,
        }


class DomainError(JackLprError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    exit_code = 3


class ConfigError(JackLprError, ValueError):
    """Invalid experiment or command-line configuration."""

    exit_code = 2


class NumericalError(JackLprError, ArithmeticError):
    """Numerical failure: quadrature, factorisation, optimisation."""

    exit_code = 3
