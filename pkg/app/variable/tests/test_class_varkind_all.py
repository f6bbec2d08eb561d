from __future__ import annotations

import pytest

from app.variable.varkind import VarKind


class TestVarKind:
    @pytest.mark.parametrize(
        "text, kind",
        [
            ("integer", VarKind.INTEGER),
            ("FLOAT", VarKind.FLOAT),
            ("FloatList", VarKind.FLOAT_LIST),
            ("float_list", VarKind.FLOAT_LIST),
            ("integer-list", VarKind.INTEGER_LIST),
            ("dict", VarKind.DICT),
        ],
    )
    def test_from_str(self, text, kind):
        assert VarKind.from_str(text) == kind

    def test_from_str_unknown_falls_back_to_string(self):
        assert VarKind.from_str("complex") == VarKind.STRING

    def test_from_any(self):
        assert VarKind.from_any(VarKind.BOOLEAN) is VarKind.BOOLEAN
        assert VarKind.from_any("list") == VarKind.LIST
        assert VarKind.from_any(3) == VarKind.STRING

    def test_is_sequence(self):
        assert VarKind.LIST.is_sequence()
        assert VarKind.INTEGER_LIST.is_sequence()
        assert not VarKind.FLOAT.is_sequence()

    def test_string_equality_and_hash(self):
        assert VarKind.FLOAT_LIST == "floatlist"
        assert VarKind.FLOAT_LIST != "float"
        assert len({VarKind.FLOAT, VarKind.FLOAT}) == 1

    def test_str_and_repr(self):
        assert str(VarKind.INTEGER_LIST) == "IntegerList"
        assert repr(VarKind.INTEGER_LIST) == "VarKind.INTEGER_LIST"
