"""Unit tests for McSummary aggregation and result files."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from app.base.errors import ConfigError
from app.model.harness.config import ExperimentConfig
from app.model.harness.emit import CSV_COLUMNS, emit, parse, summary_rows, write
from app.model.harness.estimators import EstimatorName
from app.model.harness.replication import ReplicationRecord
from app.model.harness.summary import cell_moments, summarise
from app.model.jackknife.plan import SubsampleScheme

LPR = (EstimatorName.LPR, None, None)
JACK = (EstimatorName.JACK_CHAMBERS, SubsampleScheme.NON_OVERLAPPING, 2)


@pytest.fixture
def cfg():
    return ExperimentConfig.from_dict(
        {"d": 0.25, "phi": [0.4], "theta": [-0.2], "estimators": ["lpr", "jack-chambers"], "reps": 3, "seed": 9}
    )


@pytest.fixture
def summary(cfg):
    records = [
        ReplicationRecord(0, {LPR: 0.20, JACK: 0.26}),
        ReplicationRecord(1, {LPR: 0.30, JACK: 0.21}),
        ReplicationRecord(2, {LPR: 0.22}, {JACK: "Sub-sample 2 of 2: zero periodogram ordinate"}),
    ]
    return summarise(cfg, records)


class TestCellMoments:
    """Test bias, MC standard error and RMSE."""

    def test_values(self):
        """Test two draws around zero."""
        bias, se, rmse = cell_moments(np.array([0.1, 0.3]), 0.0)
        assert bias == pytest.approx(0.2)
        assert se == pytest.approx(0.1)
        assert rmse == pytest.approx(math.sqrt(0.05))

    def test_single_draw(self):
        """Test one draw gives bias d̂ - d₀ exactly and no standard error."""
        bias, se, rmse = cell_moments(np.array([0.31]), 0.25)
        assert bias == 0.31 - 0.25
        assert rmse == pytest.approx(abs(bias))
        assert math.isnan(se)

    def test_empty(self):
        """Test no successful draws give NaN moments."""
        assert all(math.isnan(v) for v in cell_moments(np.array([]), 0.0))


class TestSummarise:
    """Test aggregation."""

    def test_failures_excluded(self, summary):
        """Test failed cells are counted and excluded from the moments."""
        jack = summary.cell("jack-chambers", "NO", 2)
        assert jack.reps == 3 and jack.failures == 1 and jack.successes == 2
        assert jack.bias == pytest.approx((0.26 + 0.21) / 2 - 0.25)

    def test_rmse_bounds_bias(self, summary):
        """Test rmse >= |bias| in every cell."""
        assert all(cell.rmse >= abs(cell.bias) for cell in summary.cells)

    def test_order_independent(self, cfg, summary):
        """Test shuffled records give the same summary."""
        records = [
            ReplicationRecord(2, {LPR: 0.22}, {JACK: "failed"}),
            ReplicationRecord(0, {LPR: 0.20, JACK: 0.26}),
            ReplicationRecord(1, {LPR: 0.30, JACK: 0.21}),
        ]
        assert summarise(cfg, records).cells == summary.cells

    def test_missing_cell(self, summary):
        """Test looking up an unknown cell."""
        with pytest.raises(KeyError):
            summary.cell("gs")


class TestEmit:
    """Test CSV and JSON output."""

    def test_csv_columns(self, summary):
        """Test the header and non-jackknife blanks."""
        lines = emit(summary, "csv").decode().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1].startswith("ARFIMA(1,d,1),0.4,-0.2,0.25,576,0.65,,,lpr,true-params,3,")
        assert ",NO,2,jack-chambers," in lines[2]
        assert lines[2].endswith(",1,9")

    def test_six_digits(self, summary):
        """Test numbers are written at 6 significant digits."""
        row = parse(emit(summary, "csv"), "csv")[0]
        assert row.rmse == float(f"{math.sqrt(0.0059 / 3):.6g}")
        assert row.bias == pytest.approx(-0.01, abs=1e-12)

    @pytest.mark.parametrize("format", ["csv", "json"])
    def test_round_trip(self, summary, format):
        """Test parse(emit(s)) gives back the rows field for field."""
        assert parse(emit(summary, format), format) == summary_rows(summary)

    @pytest.mark.parametrize("format", ["csv", "json"])
    def test_round_trip_single_draw(self, cfg, format):
        """Test an undefined MC standard error is written blank and read back as None."""
        single = summarise(cfg.with_overrides(reps=1), [ReplicationRecord(0, {LPR: 0.20, JACK: 0.30})])
        data = emit(single, format)
        rows = parse(data, format)
        assert rows == summary_rows(single)
        assert rows[0].bias_mc_se is None
        assert rows[0].bias == pytest.approx(-0.05, abs=1e-12)

    def test_strict_json(self, cfg):
        """Test JSON output holds null rather than NaN tokens."""

        def reject(token):
            raise ValueError(token)

        single = summarise(cfg.with_overrides(reps=1), [ReplicationRecord(0, {LPR: 0.20}, {JACK: "failed"})])
        rows = json.loads(emit(single, "json"), parse_constant=reject)
        assert rows[0]["bias_mc_se"] is None
        assert rows[1]["bias"] is None
        assert rows[1]["rmse"] is None
        assert rows[1]["failures"] == 1

    def test_blank_csv_moments(self, cfg):
        """Test a cell without successful draws leaves its moments blank."""
        single = summarise(cfg.with_overrides(reps=1), [ReplicationRecord(0, {LPR: 0.20}, {JACK: "failed"})])
        line = emit(single, "csv").decode().splitlines()[2]
        assert ",jack-chambers,true-params,1,,,,1,9" in line

    def test_byte_identical(self, cfg, summary):
        """Test equal summaries emit identical bytes."""
        again = summarise(
            cfg,
            [
                ReplicationRecord(0, {LPR: 0.20, JACK: 0.26}),
                ReplicationRecord(1, {LPR: 0.30, JACK: 0.21}),
                ReplicationRecord(2, {LPR: 0.22}, {JACK: "failed"}),
            ],
        )
        assert emit(again, "csv") == emit(summary, "csv")

    def test_unknown_format(self, summary):
        """Test an unknown format is rejected."""
        with pytest.raises(ConfigError):
            emit(summary, "xml")
        with pytest.raises(ConfigError):
            parse(b"", "xml")

    def test_bad_header(self):
        """Test a file with other columns is rejected."""
        with pytest.raises(ConfigError):
            parse(b"a,b\n1,2\n", "csv")

    def test_write(self, summary, tmp_path):
        """Test writing creates parent directories."""
        path = write(summary, tmp_path / "out" / "table.json", "json")
        assert parse(path.read_bytes(), "json") == summary_rows(summary)

    def test_write_error_names_path(self, summary, tmp_path):
        """Test I/O errors carry the path."""
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(OSError, match="table.csv"):
            write(summary, blocker / "table.csv")
