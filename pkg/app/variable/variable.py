from __future__ import annotations

import json
from abc import ABC
from typing import Any

from app.base.errors import ConfigError

from .varkind import VarKind


class Variable(ABC):
    """
    Abstract base class for typed configuration values.

    Attrs:
        name: Variable name, e.g. ``JLP_THREADS`` or ``m_values``.
        kind: Variable kind used for parsing.
        default: Default value if no value is provided by the subclass.
        description: Human-readable description.
        choice: Optional list of valid values (checked item-wise for lists).
        value: Current value (if applicable).

    Methods:
        from_dict(data): Create a Variable instance from a dictionary.
        get_value(): Get the current value (subclasses implement).
        describe(): Produce a compact description dict.
        to_dict(): Serialize all fields into a dict.

    Parsing errors raise ConfigError naming the variable.
    """

    @classmethod
    def from_dict(
        cls,
        data: dict[str, Any],
    ) -> Variable:
        return cls(
            name=data.get("name"),
            kind=data.get("kind"),
            default=data.get("default"),
            description=data.get("description"),
            choice=data.get("choice"),
            value=data.get("value"),
        )

    def __init__(
        self,
        name: str,
        kind: str | VarKind | None = None,
        default: Any = None,
        description: str | None = None,
        choice: list[Any] | None = None,
        value: Any = None,
    ) -> None:
        self.name = self._resolve_name(name)
        self.kind = self._resolve_kind(kind)
        self.default = default
        self.description = description
        self.choice = self._resolve_choice(choice)
        self.value = value

    def _resolve_name(
        self,
        name: str,
    ) -> str:
        if not name or not isinstance(name, str):
            msg = f"Invalid variable name: {name!r}."
            raise ConfigError(msg)
        return name

    def _resolve_kind(
        self,
        kind: str | VarKind | None,
    ) -> VarKind:
        if kind is None:
            return VarKind.STRING
        return VarKind.from_any(kind)

    def _resolve_choice(
        self,
        choice: list[Any] | None,
    ) -> list[Any] | None:
        if not choice:
            return None
        return [item for item in choice if item is not None]

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name!r}, kind={self.kind!r})"

    def _invalid(
        self,
        what: str,
        raw: Any,
    ) -> ConfigError:
        return ConfigError(f"Invalid {what} value for {self.name!r}: {raw!r}.")

    def _parse_string(
        self,
        raw: Any,
    ) -> str:
        return str(raw).strip()

    def _parse_boolean(
        self,
        raw: Any,
    ) -> bool:
        if isinstance(raw, bool):
            return raw
        text = str(raw).strip().lower()
        if text in ("0", "false", "no", "n", "off"):
            return False
        if text in ("1", "true", "yes", "y", "on"):
            return True
        raise self._invalid("boolean", raw)

    def _parse_int(
        self,
        raw: Any,
    ) -> int:
        if isinstance(raw, bool):
            raise self._invalid("integer", raw)
        if isinstance(raw, int):
            return raw
        if isinstance(raw, float) and raw.is_integer():
            return int(raw)
        try:
            return int(str(raw).strip())
        except (TypeError, ValueError) as e:
            raise self._invalid("integer", raw) from e

    def _parse_float(
        self,
        raw: Any,
    ) -> float:
        if isinstance(raw, bool):
            raise self._invalid("float", raw)
        if isinstance(raw, (int, float)):
            return float(raw)
        try:
            return float(str(raw).strip())
        except (TypeError, ValueError) as e:
            raise self._invalid("float", raw) from e

    def _split(
        self,
        raw: Any,
    ) -> list[Any]:
        if isinstance(raw, (list, tuple)):
            return list(raw)
        if isinstance(raw, (int, float)) and not isinstance(raw, bool):
            return [raw]
        if isinstance(raw, str):
            text = raw.strip()
            if text.startswith("["):
                try:
                    loaded = json.loads(text)
                except ValueError as e:
                    raise self._invalid("list", raw) from e
                if isinstance(loaded, list):
                    return loaded
            return [item.strip() for item in text.split(",") if item.strip()]
        raise self._invalid("list", raw)

    def _parse_list(
        self,
        raw: Any,
    ) -> list[str]:
        return [str(item).strip() for item in self._split(raw)]

    def _parse_float_list(
        self,
        raw: Any,
    ) -> list[float]:
        return [self._parse_float(item) for item in self._split(raw)]

    def _parse_int_list(
        self,
        raw: Any,
    ) -> list[int]:
        return [self._parse_int(item) for item in self._split(raw)]

    def _parse_dict(
        self,
        raw: Any,
    ) -> dict[str, Any]:
        if isinstance(raw, dict):
            return {str(k): v for k, v in raw.items()}
        try:
            loaded = json.loads(str(raw).strip())
        except (TypeError, ValueError) as e:
            raise self._invalid("dict", raw) from e
        if not isinstance(loaded, dict):
            raise self._invalid("dict", raw)
        return loaded

    def _parse_by_kind(
        self,
        raw: Any,
    ) -> Any:
        parsers = {
            VarKind.STRING: self._parse_string,
            VarKind.INTEGER: self._parse_int,
            VarKind.FLOAT: self._parse_float,
            VarKind.BOOLEAN: self._parse_boolean,
            VarKind.LIST: self._parse_list,
            VarKind.DICT: self._parse_dict,
            VarKind.FLOAT_LIST: self._parse_float_list,
            VarKind.INTEGER_LIST: self._parse_int_list,
        }
        value = parsers[self.kind](raw)
        if self.choice is not None:
            items = value if self.kind.is_sequence() else [value]
            for item in items:
                if item not in self.choice:
                    msg = f"Value {item!r} of {self.name!r} not in choice {self.choice!r}."
                    raise ConfigError(msg)
        return value

    def get_value(
        self,
    ) -> Any:
        raise NotImplementedError()

    def describe(
        self,
    ) -> dict[str, Any]:
        result = {
            "name": self.name,
            "kind": str(self.kind),
        }
        if self.default is not None:
            result["default"] = self.default
        if self.description is not None:
            result["description"] = self.description
        if self.choice is not None:
            result["choice"] = self.choice
        if self.value is not None:
            result["value"] = self.value
        return result

    def to_dict(
        self,
    ) -> dict[str, Any]:
        return {
            "name": self.name,
            "kind": str(self.kind),
            "default": self.default,
            "description": self.description,
            "choice": self.choice,
            "value": self.value,
        }
