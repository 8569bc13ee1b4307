"""
tatezeta — configuration tests
==============================
Run with: python -m pytest tests/test_config.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from tate.core.config_loader import load_config, preset_names
from tate.core.exceptions import ConfigError
from tate.core.logger import StructuredLogger
from tate.lrh.config import ConfigValidator, RunConfig


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("TATE_PRECISION_BITS", raising=False)
    monkeypatch.delenv("TATE_JOBS", raising=False)


# ── Presets ───────────────────────────────────────────────────────────────────

class TestPresets:
    def test_bundled_presets(self):
        assert preset_names() == ["default", "full", "quick"]

    def test_default_preset_loads(self):
        cfg = RunConfig("default")
        assert cfg.m_max == 20
        assert cfg.precision_bits == 128
        assert cfg.strip_trials == 500
        assert cfg.strip_seed == 42
        assert cfg.output_format == "json"
        assert cfg.include_timing is False

    def test_quick_preset_loads(self):
        cfg = RunConfig("quick")
        assert cfg.m_max == 8
        assert cfg.output_format == "text"
        assert cfg.fourier_validate is False

    def test_full_preset_loads(self):
        cfg = RunConfig("full")
        assert cfg.m_max == 40
        assert cfg.parallelism == 4

    def test_no_source_gives_defaults(self):
        cfg = RunConfig()
        assert cfg.m_max == 20
        assert cfg.tolerance("quadrature") == 1e-25

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("grid:\n  m_max: 3\noutput:\n  format: csv\n", encoding="utf-8")
        cfg = RunConfig(str(path))
        assert cfg.m_max == 3
        assert cfg.output_format == "csv"

    def test_missing_file_raises(self):
        with pytest.raises(ConfigError):
            load_config("/nonexistent/run.yaml")

    def test_unknown_preset_raises(self):
        with pytest.raises(ConfigError):
            RunConfig("no_such_preset")

    def test_non_mapping_yaml_raises(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config(str(path))

    def test_broken_yaml_raises(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("grid: [1, 2\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config(str(path))


# ── Validation ────────────────────────────────────────────────────────────────

class TestValidator:
    def test_valid_dict_passes(self):
        raw = {"grid": {"m_max": 4}, "runtime": {"parallelism": 2}}
        assert ConfigValidator.validate(raw) is raw

    @pytest.mark.parametrize("raw", [
        {"unknown": {}},
        {"grid": []},
        {"grid": {"m_max": -1}},
        {"grid": {"m_max": True}},
        {"grid": {"k_filter": 3}},
        {"numeric": {"precision_bits": 32}},
        {"numeric": {"tolerances": {"quadrature": 0}}},
        {"weil": {"enabled": "yes"}},
        {"weil": {"pairing_bound": -1}},
        {"oracle": {"samples": [[0.0, 1.0]]}},
        {"oracle": {"samples": [[1.0]]}},
        {"strip": {"trials": 0}},
        {"output": {"format": "xml"}},
        {"output": {"path": 5}},
        {"runtime": {"parallelism": 0}},
    ])
    def test_invalid_values_raise(self, raw):
        with pytest.raises(ConfigError):
            ConfigValidator.validate(raw)

    def test_non_dict_raises(self):
        with pytest.raises(ConfigError):
            ConfigValidator.validate(["grid"])

    def test_error_carries_details(self):
        with pytest.raises(ConfigError) as err:
            ConfigValidator.validate({"grid": {"m_max": -1}})
        assert err.value.details["section"] == "grid"


# ── Environment ───────────────────────────────────────────────────────────────

class TestEnvironment:
    def test_precision_override(self, monkeypatch):
        monkeypatch.setenv("TATE_PRECISION_BITS", "256")
        assert RunConfig("default").precision_bits == 256

    def test_jobs_override(self, monkeypatch):
        monkeypatch.setenv("TATE_JOBS", "3")
        assert RunConfig("default").parallelism == 3

    def test_env_ignored_when_disabled(self, monkeypatch):
        monkeypatch.setenv("TATE_JOBS", "3")
        assert RunConfig("default", use_env=False).parallelism == 1

    def test_empty_value_ignored(self, monkeypatch):
        monkeypatch.setenv("TATE_PRECISION_BITS", "")
        assert RunConfig("default").precision_bits == 128

    @pytest.mark.parametrize("var,value", [
        ("TATE_PRECISION_BITS", "lots"),
        ("TATE_PRECISION_BITS", "32"),
        ("TATE_JOBS", "0"),
    ])
    def test_bad_env_raises(self, monkeypatch, var, value):
        monkeypatch.setenv(var, value)
        with pytest.raises(ConfigError):
            RunConfig("default")


# ── Derived views ─────────────────────────────────────────────────────────────

class TestRunConfig:
    def test_grid_includes_vacuous_pairs(self):
        cfg = RunConfig({"grid": {"m_max": 8}})
        pairs = cfg.grid()
        assert len(pairs) == 45
        assert sum(1 for m, k in pairs if (m - k) % 2 == 0) == 25

    def test_k_filter(self):
        cfg = RunConfig({"grid": {"m_max": 6, "k_filter": [0]}})
        assert cfg.grid() == [(m, 0) for m in range(7)]

    def test_sample_points(self):
        cfg = RunConfig("quick")
        assert cfg.sample_points() == [complex(1, 0), complex(1.5, 0.5), complex(2, -1)]

    def test_pairing_bound(self):
        assert RunConfig("default").pairing_bound is None
        assert RunConfig("quick").pairing_bound == 4
        cfg = RunConfig({"weil": {"pairing_bound": 8}})
        assert cfg.to_dict()["weil"]["pairing_bound"] == 8

    def test_tolerance_override_merges(self):
        cfg = RunConfig({"numeric": {"tolerances": {"ratio_spread": 1e-6}}})
        assert cfg.tolerance("ratio_spread") == 1e-6
        assert cfg.tolerance("orthogonality") == 1e-10

    def test_override_applies_and_skips_none(self):
        cfg = RunConfig("default").override(m_max=5, output_format=None)
        assert cfg.m_max == 5
        assert cfg.output_format == "json"

    def test_override_revalidates(self):
        with pytest.raises(ConfigError):
            RunConfig("default").override(output_format="xml")

    def test_override_unknown_attribute(self):
        with pytest.raises(ConfigError):
            RunConfig("default").override(colour="blue")

    def test_to_dict_round_trips_through_validator(self):
        cfg = RunConfig("full")
        again = RunConfig(cfg.to_dict())
        assert again.to_dict() == cfg.to_dict()


# ── Logger ────────────────────────────────────────────────────────────────────

class TestLogger:
    def test_entries_filtered(self):
        logger = StructuredLogger(name="test")
        logger.log("lrh_verify", m=4, k=0)
        logger.error("strip_trial", trial=3)
        assert len(logger.get_entries(operation="lrh_verify")) == 1
        assert logger.get_entries(level="ERROR")[0]["trial"] == 3

    def test_cap_trims_oldest(self):
        logger = StructuredLogger(max_entries=10)
        for i in range(25):
            logger.debug("tick", i=i)
        entries = logger.get_entries()
        assert len(entries) <= 10
        assert entries[-1]["i"] == 24

    def test_console_goes_to_stderr(self, capsys):
        StructuredLogger(name="cli", console=True).log("run_done", passed=True)
        captured = capsys.readouterr()
        assert "run_done" in captured.err
        assert captured.out == ""

    def test_bound_child_shares_buffer(self):
        run_log = StructuredLogger(name="run")
        lrh_log = run_log.bind(suite="lrh")
        lrh_log.log("lrh_verify", m=2, k=0)
        run_log.log("run_done")
        assert len(run_log.get_entries()) == 2
        assert run_log.get_entries(suite="lrh")[0]["m"] == 2
        assert "suite" not in run_log.get_entries(operation="run_done")[0]

    def test_bind_merges_context(self):
        child = StructuredLogger().bind(suite="oracle").bind(index=3)
        entry = child.error("random_w_scan")
        assert entry["suite"] == "oracle" and entry["index"] == 3
        assert entry["level"] == "ERROR"
