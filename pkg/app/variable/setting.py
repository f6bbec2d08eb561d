from __future__ import annotations

from typing import Any

from app.base import Component
from app.base.errors import ConfigError
from app.variable.constant import Constant
from app.variable.environ import Environ
from app.variable.variable import Variable


class Setting(Component):
    """
    Configuration container for environment variables and constants.

    Attributes:
        parent: Optional parent component for logging inheritance.
        logformat: Custom log format for this setting instance.
        variables: Dictionary mapping variable names to Environ instances.
        constants: Dictionary mapping constant names to Constant instances.
        context: Resolved configuration dictionary with all values.

    Methods:
        from_catalogue(catalogue, data): Parse a flat mapping (e.g. a JSON
            experiment file) against a list of Constant definitions.
        get(name, default): Retrieve value by name.
        build(): Build resolved configuration context.
        describe(): Get structured description of all settings.
        to_dict(): Serialize to dictionary format.
        __contains__ / __getitem__ / __len__: Mapping-style access.

    Example:
    ```python
        setting = Setting(
            variables=[{"name": "JLP_THREADS", "kind": "Integer", "default": 1}],
            constants=[{"name": "JLP_APP_NAME", "kind": "String", "value": "jacklpr"}],
        )
        threads = setting.get("JLP_THREADS")
        name = setting["JLP_APP_NAME"]
    ```
    """

    @classmethod
    def from_dict(
        cls,
        data: dict[str, Any],
    ) -> Setting:
        return cls(
            variables=data.get("variables"),
            constants=data.get("constants"),
        )

    @classmethod
    def from_catalogue(
        cls,
        catalogue: list[dict[str, Any]],
        data: dict[str, Any],
        parent: Component | None = None,
    ) -> Setting:
        known = {item["name"] for item in catalogue}
        unknown = sorted(set(data) - known)
        if unknown:
            msg = f"Unknown configuration keys: {unknown}. Known keys: {sorted(known)}"
            raise ConfigError(msg)
        constants = [{**item, "value": data.get(item["name"])} for item in catalogue]
        return cls(parent=parent, constants=constants)

    def __init__(
        self,
        parent: Component | None = None,
        logformat: Any = None,
        variables: list[Environ | dict[str, Any]] | None = None,
        constants: list[Constant | dict[str, Any]] | None = None,
    ) -> None:
        super().__init__(
            parent=parent,
            logformat=logformat,
        )
        self.variables: dict[str, Environ] = self._resolve_items(variables, Environ)
        self.constants: dict[str, Constant] = self._resolve_items(constants, Constant)
        self.context = self.build()

    def _resolve_items(
        self,
        items: list[Variable | dict[str, Any]] | None,
        cls: type[Variable],
    ) -> dict[str, Any]:
        if items is None:
            return {}
        result: dict[str, Any] = {}
        for item in items:
            if isinstance(item, cls):
                result[item.name] = item
            elif isinstance(item, dict):
                resolved = cls.from_dict(item)
                result[resolved.name] = resolved
            else:
                msg = f"Invalid {cls.__name__} definition: {type(item)!r}."
                raise ConfigError(msg)
        return result

    def build(self) -> dict[str, Any]:
        result: dict[str, Any] = {}
        for variable in self.variables.values():
            result[variable.name] = variable.value
        for constant in self.constants.values():
            result[constant.name] = constant.value
        return result

    def get(
        self,
        name: str,
        default: Any = None,
    ) -> Any:
        if name in self.context:
            return self.context[name]
        return default

    def __contains__(
        self,
        name: str,
    ) -> bool:
        return name in self.variables or name in self.constants

    def __getitem__(self, name: str) -> Any:
        if name in self:
            return self.context[name]
        msg = f"Name not found: {name!r}"
        raise KeyError(msg)

    def __len__(self) -> int:
        return len(self.variables) + len(self.constants)

    def describe(
        self,
    ) -> dict[str, Any]:
        return {
            "variables": [v.describe() for v in self.variables.values()],
            "constants": [c.describe() for c in self.constants.values()],
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "variables": [v.to_dict() for v in self.variables.values()],
            "constants": [c.to_dict() for c in self.constants.values()],
        }
