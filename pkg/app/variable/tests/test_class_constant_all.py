from __future__ import annotations

import pytest

from app.base.errors import ConfigError
from app.interface.constants import CONSTANTS
from app.variable.constant import Constant
from app.variable.varkind import VarKind


class TestConstant:
    def test_float_value(self):
        const = Constant("JLP_DEFAULT_ALPHA", "0.65", "float")
        assert const.kind == VarKind.FLOAT
        assert const.value == 0.65

    def test_default_when_value_missing(self):
        const = Constant("reps", None, "integer", default=5000)
        assert const.value == 5000

    def test_integer_list(self):
        const = Constant(name="m_values", kind="IntegerList", value="2,3")
        assert const.value == [2, 3]

    def test_float_list(self):
        const = Constant(name="phi", kind=VarKind.FLOAT_LIST, value=[0.4, -0.2])
        assert const.value == [0.4, -0.2]

    def test_invalid_value(self):
        with pytest.raises(ConfigError, match="'n'"):
            Constant("n", "many", "integer")

    def test_choice(self):
        with pytest.raises(ConfigError):
            Constant("format", "xml", "string", choice=["csv", "json"])

    def test_from_dict(self):
        const = Constant.from_dict({"name": "seed", "kind": "Integer", "value": None, "default": 0})
        assert const.value == 0

    def test_application_constants(self):
        values = {const.name: const.value for const in CONSTANTS}
        assert values == {"JLP_APP_NAME": "jacklpr", "JLP_DEFAULT_ALPHA": 0.65, "JLP_DEFAULT_REPS": 5000}
