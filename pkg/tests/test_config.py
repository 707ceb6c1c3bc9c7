"""Tests for quasipartial.config: RunConfig dataclass and load_config()."""

from __future__ import annotations

from pathlib import Path
from unittest.mock import patch

import pytest

from quasipartial.config import RunConfig, load_config
from quasipartial.errors import ParameterError
from quasipartial.models import ScanConfig, Taper


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig()
        assert cfg.scan == ScanConfig()
        assert cfg.member_radius == 0.999
        assert cfg.tol == 1e-6
        assert cfg.M == 64
        assert cfg.output_path is None
        assert cfg.output_format == "json"
        assert cfg.taper is Taper.FEJER
        assert cfg.workers == 1

    def test_member_scan(self):
        cfg = RunConfig(scan=ScanConfig(grid_size=512), member_radius=0.99)
        assert cfg.member_scan == ScanConfig(grid_size=512, radius=0.99)

    def test_taper_coerced(self):
        assert RunConfig(taper="none").taper is Taper.NONE

    @pytest.mark.parametrize(
        "kwargs",
        [{"tol": 0.0}, {"M": 1}, {"output_format": "xml"}, {"member_radius": 1.5}, {"workers": 0}],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)

    def test_as_dict(self):
        cfg = RunConfig(output_path=Path("/tmp/r.json"))
        d = cfg.as_dict()
        assert d["output_path"] == "/tmp/r.json"
        assert d["taper"] == "fejer"
        assert d["grid_size"] == 4096
        assert set(d) == {
            "grid_size", "refine_tol", "radius", "member_radius", "tol",
            "M", "output_path", "output_format", "taper", "workers",
        }


class TestLoadConfig:
    def test_full_yaml(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text(
            "grid_size: 1024\n"
            "refine_tol: 1.0e-9\n"
            "radius: 0.9\n"
            "member_radius: 0.95\n"
            "tol: 1.0e-7\n"
            "M: 32\n"
            "output_path: /out/report.csv\n"
            "output_format: csv\n"
            "taper: none\n"
            "workers: 3\n"
        )
        cfg = load_config(cfg_file)
        assert cfg.scan == ScanConfig(grid_size=1024, refine_tol=1e-9, radius=0.9)
        assert cfg.member_radius == 0.95
        assert cfg.tol == 1e-7
        assert cfg.M == 32
        assert cfg.output_path == Path("/out/report.csv")
        assert cfg.output_format == "csv"
        assert cfg.taper is Taper.NONE
        assert cfg.workers == 3

    def test_partial_yaml_keeps_defaults(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("M: 16\n")
        cfg = load_config(cfg_file)
        assert cfg.M == 16
        assert cfg.scan == ScanConfig()

    def test_file_not_found(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "nonexistent.yaml")

    def test_empty_yaml_gives_defaults(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("")
        assert load_config(cfg_file) == RunConfig()

    def test_yaml_returns_non_dict(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("- item1\n- item2\n")
        with pytest.raises(ValueError, match="Invalid config"):
            load_config(cfg_file)

    def test_unknown_key(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("vault_path: /vault\n")
        with pytest.raises(ValueError, match="Unknown config key.*vault_path"):
            load_config(cfg_file)

    def test_bad_taper(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("taper: hann\n")
        with pytest.raises(ValueError, match="taper"):
            load_config(cfg_file)

    def test_bad_scan_value(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("radius: 2\n")
        with pytest.raises(ParameterError):
            load_config(cfg_file)

    @pytest.mark.parametrize(
        "line, key",
        [
            ("tol: abc\n", "tol"),
            ("grid_size: big\n", "grid_size"),
            ("workers: x\n", "workers"),
            ("M: 2.5\n", "M"),
            ("M: true\n", "M"),
            ("radius: [0.5]\n", "radius"),
            ("output_format: 3\n", "output_format"),
        ],
    )
    def test_ill_typed_value_names_key(self, tmp_path, line, key):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text(line)
        with pytest.raises(ValueError, match=rf"^{key}: expected"):
            load_config(cfg_file)

    def test_integer_accepted_for_float_key(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("radius: 1\n")
        assert load_config(cfg_file).scan.radius == 1.0

    def test_config_path_none_falls_back_to_defaults(self):
        with patch.object(Path, "exists", return_value=False):
            assert load_config(None) == RunConfig()

    def test_output_path_expanduser(self, tmp_path):
        cfg_file = tmp_path / "config.yaml"
        cfg_file.write_text("output_path: ~/report.json\n")
        assert "~" not in str(load_config(cfg_file).output_path)
