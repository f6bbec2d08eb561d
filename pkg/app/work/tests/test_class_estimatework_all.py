"""Unit tests for EstimateWork and read_series."""

from __future__ import annotations

import numpy as np
import pytest

from app.base.component import Component
from app.base.errors import ConfigError
from app.interface.payload import Payload
from app.model.arfima.model import ArfimaModel
from app.model.arfima.simulate import simulate
from app.model.harness.replication import replication_rng
from app.model.jackknife.covariance import default_engine
from app.model.jackknife.estimator import jackknife_estimate
from app.model.jackknife.feasible import IterationConfig, feasible_jackknife
from app.model.jackknife.plan import SubsamplePlan, SubsampleScheme
from app.model.jackknife.weights import chambers_weights, optimal_weights
from app.model.lpr.estimator import lpr_estimate
from app.work.estimate import EstimateWork, read_series

SETTINGS = {"JLP_APP_NAME": "jacklpr", "JLP_DEFAULT_ALPHA": 0.65, "JLP_SEED": 0, "JLP_THREADS": 1}


@pytest.fixture
def series(tmp_path):
    y = simulate(ArfimaModel(d=0.2, ar=[0.4]), 128, replication_rng(3, 0))
    path = tmp_path / "y.txt"
    np.savetxt(path, y, fmt="%.17g")
    return path, y


def _work(**arguments):
    parent = Component(level="ERROR")
    payload = Payload({**SETTINGS, "action": "estimate", **arguments}, parent=parent)
    return EstimateWork(parent=parent, payload=payload)


class TestReadSeries:
    """Test series input parsing."""

    def test_plain(self, tmp_path):
        """Test one value per line."""
        path = tmp_path / "y.txt"
        path.write_text("1.5\n-2\n3e-1\n")
        np.testing.assert_array_equal(read_series(path), [1.5, -2.0, 0.3])

    def test_header_and_columns(self, tmp_path):
        """Test a header line is skipped and the first CSV column is read."""
        path = tmp_path / "y.csv"
        path.write_text("value,time\n1.0,0\n2.0,1\n\n4.0,2\n")
        np.testing.assert_array_equal(read_series(path), [1.0, 2.0, 4.0])

    def test_bad_line(self, tmp_path):
        """Test a non-numeric line after the first names its line number."""
        path = tmp_path / "y.txt"
        path.write_text("1.0\n2.0\noops\n")
        with pytest.raises(ConfigError, match="Line 3") as info:
            read_series(path)
        assert info.value.diagnostics["line"] == 3

    def test_empty(self, tmp_path):
        """Test a file without values is rejected."""
        path = tmp_path / "y.txt"
        path.write_text("value\n")
        with pytest.raises(ConfigError, match="No values"):
            read_series(path)

    def test_missing_file(self, tmp_path):
        """Test an unreadable file raises ConfigError."""
        with pytest.raises(ConfigError, match="Cannot read"):
            read_series(tmp_path / "absent.txt")


class TestEstimateWork:
    """Test estimator dispatch."""

    def test_lpr(self, series):
        """Test lpr matches lpr_estimate on the same series."""
        path, y = series
        result = _work(input=str(path), estimator="lpr").run()
        assert result["d_hat"] == lpr_estimate(y, 0.65).d
        assert result["m"] is None
        assert result["n"] == 128

    def test_chambers(self, series):
        """Test jack-chambers with a moving-block scheme."""
        path, y = series
        result = _work(input=str(path), estimator="jack-chambers", m=4, scheme="MB", alpha=0.7).run()
        plan = SubsamplePlan(128, 4, SubsampleScheme.MOVING_BLOCK)
        assert result["d_hat"] == pytest.approx(jackknife_estimate(y, plan, chambers_weights(128, 4, 0.7), 0.7))
        assert result["scheme"] == "MB"
        assert result["alpha"] == 0.7

    def test_optimal_with_model(self, series):
        """Test jack-opt uses the weights of a supplied model."""
        path, y = series
        result = _work(input=str(path), estimator="jack-opt", d=0.2, phi=[0.4]).run()
        model = ArfimaModel(d=0.2, ar=[0.4])
        plan = SubsamplePlan(128, 2)
        weights = optimal_weights(plan, 0.65, default_engine().get(model, plan, 0.65))
        assert result["d_hat"] == pytest.approx(jackknife_estimate(y, plan, weights, 0.65))
        assert result["knowledge"] == "true-params"

    def test_optimal_without_model(self, series):
        """Test jack-opt without a model is one feasible pass with the given orders."""
        path, y = series
        result = _work(input=str(path), estimator="jack-opt", p=1, q=0).run()
        expected = feasible_jackknife(y, SubsamplePlan(128, 2), 0.65, p=1, q=0, cfg=IterationConfig.one_pass())
        assert result["d_hat"] == pytest.approx(expected.d_hat)
        assert result["knowledge"] == "misspecified(1,0)"

    def test_indivisible_length(self, series):
        """Test m not dividing the series length is a configuration error."""
        path, _ = series
        with pytest.raises(ConfigError, match="m = 3"):
            _work(input=str(path), estimator="jack-chambers", m=3).run()

    def test_missing_estimator(self, series):
        """Test an estimator is required."""
        path, _ = series
        with pytest.raises(ConfigError, match="work.estimator"):
            _work(input=str(path)).run()
