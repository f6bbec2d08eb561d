from app.base.component import Component
from app.base.errors import ConfigError, DomainError, JackLprError, NumericalError

__all__ = [
    "Component",
    "ConfigError",
    "DomainError",
    "JackLprError",
    "NumericalError",
]
