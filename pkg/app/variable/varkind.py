from __future__ import annotations

from enum import Enum
from typing import Any


class VarKind(str, Enum):
    """
    Enumeration of supported configuration value types.

    Attrs:
        INTEGER: Integer, e.g. a sample length or replication count.
        FLOAT: Float, e.g. the memory parameter d or the bandwidth exponent.
        STRING: String, e.g. a log level or an output path.
        BOOLEAN: Boolean flag.
        LIST: List of strings, e.g. estimator names.
        DICT: JSON object.
        FLOAT_LIST: List of floats, e.g. AR or MA coefficients.
        INTEGER_LIST: List of integers, e.g. jackknife sub-sample counts.

    Methods:
        from_str(string): Parse kind from string (case-insensitive).
        from_any(value): Resolve kind from supported inputs.

    Example:
    ```python
        kind = VarKind.from_str("floatlist")
        assert kind == VarKind.FLOAT_LIST
    ```
    """

    INTEGER = "Integer"
    FLOAT = "Float"
    STRING = "String"
    BOOLEAN = "Boolean"
    LIST = "List"
    DICT = "Dict"
    FLOAT_LIST = "FloatList"
    INTEGER_LIST = "IntegerList"

    @classmethod
    def _missing_(cls, value) -> VarKind | None:
        if isinstance(value, str):
            return cls.from_str(value)
        return VarKind.STRING

    @classmethod
    def from_str(cls, string: str) -> VarKind:
        key = string.replace("_", "").replace("-", "").lower()
        for dkind in VarKind:
            if dkind.value.lower() == key:
                return dkind
        return VarKind.STRING

    @classmethod
    def from_any(cls, value: Any) -> VarKind:
        if isinstance(value, VarKind):
            return value
        if isinstance(value, str):
            return cls.from_str(value)
        return VarKind.STRING

    def is_sequence(self) -> bool:
        return self in (VarKind.LIST, VarKind.FLOAT_LIST, VarKind.INTEGER_LIST)

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}.{self.name}"

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            return self.value.lower() == other.lower()
        return super().__eq__(other)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return super().__hash__()
