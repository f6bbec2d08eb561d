"""Unit tests for SimulateWork."""

from __future__ import annotations

import numpy as np
import pytest

from app.base.component import Component
from app.base.errors import ConfigError
from app.interface.payload import Payload
from app.model.arfima.model import ArfimaModel
from app.work.simulate import SimulateWork, model_from_payload

SETTINGS = {"JLP_APP_NAME": "jacklpr", "JLP_SEED": 0, "JLP_THREADS": 1, "JLP_DEFAULT_ALPHA": 0.65}


def _payload(**arguments):
    return Payload({**SETTINGS, "action": "simulate", **arguments}, parent=Component(level="ERROR"))


class TestModelFromPayload:
    """Test model construction from arguments."""

    def test_defaults(self):
        """Test unset arguments give white noise."""
        assert model_from_payload(_payload(n=10)) == ArfimaModel()

    def test_values(self):
        """Test every model argument is used."""
        model = model_from_payload(_payload(d=0.3, phi=[-0.5], theta=[0.2], sigma2=2.0, mu=1.0))
        assert model == ArfimaModel(d=0.3, ar=[-0.5], ma=[0.2], sigma2=2.0, mu=1.0)

    def test_invalid(self):
        """Test an invalid model is a configuration error."""
        with pytest.raises(ConfigError, match="Invalid model"):
            model_from_payload(_payload(phi=[-1.0]))


class TestSimulateWork:
    """Test the simulate action."""

    def test_same_seed(self, tmp_path):
        """Test the same seed writes the same series."""
        parent = Component(level="ERROR")
        a = SimulateWork(parent, _payload(n=50, seed=4, d=0.1, out=str(tmp_path / "a.txt"))).run()
        b = SimulateWork(parent, _payload(n=50, seed=4, d=0.1, out=str(tmp_path / "b.txt"))).run()
        np.testing.assert_array_equal(a, b)
        assert (tmp_path / "a.txt").read_text() == (tmp_path / "b.txt").read_text()
        assert len((tmp_path / "a.txt").read_text().splitlines()) == 50

    def test_exact_text(self, tmp_path):
        """Test values survive the text round trip exactly."""
        out = tmp_path / "nested" / "y.txt"
        y = SimulateWork(Component(level="ERROR"), _payload(n=20, seed=1, mu=3.0, out=str(out))).run()
        np.testing.assert_array_equal(np.loadtxt(out), y)

    def test_missing_length(self):
        """Test n is required."""
        with pytest.raises(ConfigError, match="work.n"):
            SimulateWork(Component(level="ERROR"), _payload()).run()
