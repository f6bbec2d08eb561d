from __future__ import annotations

import pytest

from app.base.errors import ConfigError
from app.variable.constant import Constant
from app.variable.varkind import VarKind


class TestVariableParsing:
    def test_parse_integer(self):
        assert Constant("n", "576", "Integer").value == 576
        assert Constant("n", 576.0, "Integer").value == 576

    def test_parse_integer_rejects_boolean(self):
        with pytest.raises(ConfigError, match="'n'"):
            Constant("n", True, "Integer")

    def test_parse_float(self):
        assert Constant("alpha", "0.65", "Float").value == 0.65
        assert Constant("alpha", 1, "Float").value == 1.0

    def test_parse_float_invalid(self):
        with pytest.raises(ConfigError, match="Invalid float"):
            Constant("alpha", "abc", "Float")

    def test_parse_boolean(self):
        assert Constant("flag", "yes", "Boolean").value is True
        assert Constant("flag", "off", "Boolean").value is False
        with pytest.raises(ConfigError):
            Constant("flag", "maybe", "Boolean")

    def test_parse_list_from_string_and_json(self):
        assert Constant("estimators", "lpr, gs", "List").value == ["lpr", "gs"]
        assert Constant("estimators", '["lpr", "mle"]', "List").value == ["lpr", "mle"]
        assert Constant("estimators", "", "List").value == []

    def test_parse_float_list(self):
        assert Constant("phi", [0.4], "FloatList").value == [0.4]
        assert Constant("phi", "0.4,-0.2", "FloatList").value == [0.4, -0.2]
        assert Constant("phi", 0.9, "FloatList").value == [0.9]

    def test_parse_int_list(self):
        assert Constant("m_values", "2,3,4", "IntegerList").value == [2, 3, 4]
        with pytest.raises(ConfigError):
            Constant("m_values", ["2", "x"], "IntegerList")

    def test_parse_dict(self):
        assert Constant("extra", '{"a": 1}', "Dict").value == {"a": 1}
        with pytest.raises(ConfigError):
            Constant("extra", "[1, 2]", "Dict")

    def test_choice_scalar(self):
        assert Constant("knowledge", "estimated", choice=["estimated", "true-params"]).value == "estimated"
        with pytest.raises(ConfigError, match="not in choice"):
            Constant("knowledge", "guess", choice=["estimated", "true-params"])

    def test_choice_list_is_checked_item_wise(self):
        choice = ["NO", "MB"]
        assert Constant("schemes", "NO,MB", "List", choice=choice).value == ["NO", "MB"]
        with pytest.raises(ConfigError):
            Constant("schemes", "NO,XX", "List", choice=choice)


class TestConstant:
    def test_default_used_when_value_missing(self):
        c = Constant("alpha", None, VarKind.FLOAT, default=0.65)
        assert c.value == 0.65

    def test_from_dict(self):
        c = Constant.from_dict({"name": "reps", "kind": "Integer", "value": "10", "default": 5000})
        assert c.value == 10
        assert c.default == 5000

    def test_invalid_name(self):
        with pytest.raises(ConfigError):
            Constant("", 1)

    def test_describe_and_to_dict(self):
        c = Constant("m_values", [2], "IntegerList", description="sub-sample counts")
        assert c.describe() == {
            "name": "m_values",
            "kind": "IntegerList",
            "description": "sub-sample counts",
            "value": [2],
        }
        assert c.to_dict()["default"] is None
        assert repr(c) == "Constant(name='m_values', kind=VarKind.INTEGER_LIST)"
