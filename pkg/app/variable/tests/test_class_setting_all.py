from __future__ import annotations

import pytest

from app.base.errors import ConfigError
from app.variable.constant import Constant
from app.variable.environ import Environ
from app.variable.setting import Setting

CATALOGUE = [
    {"name": "n", "kind": "Integer", "default": 576},
    {"name": "alpha", "kind": "Float", "default": 0.65},
    {"name": "m_values", "kind": "IntegerList", "default": [2]},
]


class TestSetting:
    """Test Setting container."""

    def test_init_empty(self):
        """Test initialization with no arguments."""
        setting = Setting()
        assert len(setting) == 0
        assert setting.context == {}

    def test_init_with_instances_and_dicts(self, monkeypatch):
        """Test variables and constants given as instances or dicts."""
        monkeypatch.setenv("JLP_THREADS", "3")
        monkeypatch.delenv("JLP_SEED", raising=False)
        setting = Setting(
            variables=[Environ("JLP_THREADS", "Integer", 1), {"name": "JLP_SEED", "kind": "Integer", "default": 0}],
            constants=[Constant("JLP_APP_NAME", "jacklpr"), {"name": "JLP_DEFAULT_ALPHA", "kind": "Float", "value": 0.65}],
        )
        assert len(setting) == 4
        assert setting["JLP_THREADS"] == 3
        assert setting.get("JLP_SEED") == 0
        assert setting["JLP_DEFAULT_ALPHA"] == 0.65
        assert "JLP_APP_NAME" in setting

    def test_invalid_item_type(self):
        """Test non-dict non-variable definitions are rejected."""
        with pytest.raises(ConfigError):
            Setting(constants=[42])

    def test_getitem_missing(self):
        """Test missing names raise KeyError and get returns default."""
        setting = Setting()
        with pytest.raises(KeyError):
            setting["nope"]
        assert setting.get("nope", "x") == "x"

    def test_from_catalogue_defaults_and_values(self):
        """Test catalogue parsing fills defaults and parses values."""
        setting = Setting.from_catalogue(CATALOGUE, {"n": "96", "m_values": "2,3"})
        assert setting.context == {"n": 96, "alpha": 0.65, "m_values": [2, 3]}

    def test_from_catalogue_unknown_key(self):
        """Test unknown keys are reported."""
        with pytest.raises(ConfigError, match="Unknown configuration keys"):
            Setting.from_catalogue(CATALOGUE, {"bandwidth": 3})

    def test_describe_and_to_dict(self):
        """Test structured description of all items."""
        setting = Setting.from_dict({"constants": [{"name": "reps", "kind": "Integer", "value": 10}]})
        assert setting.describe()["constants"][0]["value"] == 10
        assert setting.to_dict()["variables"] == []
