"""Run configuration loading and defaults."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .classes import DEFAULT_TOL, MEMBER_SCAN_RADIUS
from .models import ScanConfig, Taper

_DEFAULT_CONFIG_DIR = Path.home() / ".config" / "quasipartial"
_DEFAULT_CONFIG_PATH = _DEFAULT_CONFIG_DIR / "config.yaml"

OUTPUT_FORMATS = ("json", "csv")

_SCAN_KEYS = ("grid_size", "refine_tol", "radius")
_FLOAT_KEYS = ("refine_tol", "radius", "member_radius", "tol")
_INT_KEYS = ("grid_size", "M", "workers")
_STR_KEYS = ("output_path", "output_format", "taper")


def _typed(raw: dict, key: str) -> object:
    """Value of ``key`` with YAML's bool/int/float distinctions enforced."""
    value = raw[key]
    if key in _INT_KEYS:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"{key}: expected an integer, got {value!r}")
        return value
    if key in _FLOAT_KEYS:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"{key}: expected a number, got {value!r}")
        return float(value)
    if not isinstance(value, str):
        raise ValueError(f"{key}: expected a string, got {value!r}")
    return value


@dataclass
class RunConfig:
    scan: ScanConfig = field(default_factory=ScanConfig)
    member_radius: float = MEMBER_SCAN_RADIUS
    tol: float = DEFAULT_TOL
    M: int = 64
    output_path: Path | None = None
    output_format: str = "json"
    taper: Taper = Taper.FEJER
    workers: int = 1

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.M < 2:
            raise ValueError(f"M must be >= 2, got {self.M}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output_format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}"
            )
        if not 0 < self.member_radius <= 1:
            raise ValueError(f"member_radius must lie in (0, 1], got {self.member_radius}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        self.taper = Taper(self.taper)

    @property
    def member_scan(self) -> ScanConfig:
        return dataclasses.replace(self.scan, radius=self.member_radius)

    def as_dict(self) -> dict:
        return {
            "grid_size": self.scan.grid_size,
            "refine_tol": self.scan.refine_tol,
            "radius": self.scan.radius,
            "member_radius": self.member_radius,
            "tol": self.tol,
            "M": self.M,
            "output_path": str(self.output_path) if self.output_path else None,
            "output_format": self.output_format,
            "taper": self.taper.value,
            "workers": self.workers,
        }


def load_config(config_path: Path | None = None) -> RunConfig:
    """Load config from YAML. Without an explicit path a missing file means defaults."""
    path = Path(config_path or _DEFAULT_CONFIG_PATH).expanduser()

    if not path.exists():
        if config_path is None:
            return RunConfig()
        raise FileNotFoundError(
            f"Config file not found: {path}\n"
            f"See config.example.yaml for reference."
        )

    raw = yaml.safe_load(path.read_text())
    if raw is None:
        return RunConfig()
    if not isinstance(raw, dict):
        raise ValueError(f"Invalid config file: {path}")

    unknown = sorted(set(raw) - {*_FLOAT_KEYS, *_INT_KEYS, *_STR_KEYS})
    if unknown:
        raise ValueError(f"Unknown config key(s): {', '.join(unknown)}")
    values = {key: _typed(raw, key) for key in raw if raw[key] is not None}

    scan_kwargs = {key: values[key] for key in _SCAN_KEYS if key in values}
    kwargs: dict = {"scan": ScanConfig(**scan_kwargs)}
    for key in ("member_radius", "tol", "M", "workers", "output_format"):
        if key in values:
            kwargs[key] = values[key]
    if values.get("output_path"):
        kwargs["output_path"] = Path(values["output_path"]).expanduser()
    if "taper" in values:
        try:
            kwargs["taper"] = Taper(values["taper"])
        except ValueError:
            raise ValueError(f"taper must be 'none' or 'fejer', got {values['taper']!r}") from None

    return RunConfig(**kwargs)
