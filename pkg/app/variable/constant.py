from __future__ import annotations

from typing import Any

from .variable import Variable
from .varkind import VarKind


class Constant(Variable):
    """
    Fixed configuration value with type parsing and validation.

    Used for application constants and for the keys of an experiment
    configuration file, where a missing key falls back to ``default``.

    Attrs:
        name: Constant name.
        kind: Variable kind used for parsing.
        default: Value used when ``value`` is None.
        description: Human-readable description.
        choice: Optional list of valid values.
        value: Parsed constant value.

    Example:
    ```python
        c = Constant(name="m_values", kind="IntegerList", value="2,3")
        assert c.value == [2, 3]
    ```
    """

    @classmethod
    def from_dict(
        cls,
        data: dict[str, Any],
    ) -> Variable:
        return cls(
            name=data.get("name"),
            kind=data.get("kind"),
            description=data.get("description"),
            value=data.get("value"),
            default=data.get("default"),
            choice=data.get("choice"),
        )

    def __init__(
        self,
        name: str,
        value: Any,
        kind: str | VarKind | None = None,
        description: str | None = None,
        default: Any = None,
        choice: list[Any] | None = None,
    ) -> None:
        super().__init__(
            name=name,
            kind=kind,
            default=default,
            description=description,
            choice=choice,
        )
        self.value = self.get_value(value)

    def get_value(
        self,
        value: Any,
    ) -> Any:
        if value is None:
            return self.default
        return self._parse_by_kind(value)
