"""Render reports as JSON (canonical) or CSV (projection) and write them out."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import logging
import math
import sys
from collections.abc import Iterable, Mapping
from enum import Enum
from pathlib import Path

import numpy as np

from .models import CosineSumMinimum, VerificationReport

log = logging.getLogger(__name__)

VERIFICATION_COLUMNS = (
    "n", "alpha", "beta", "c", "m", "bound", "observed_min", "margin", "residual", "pass",
)
COSMIN_COLUMNS = ("gamma", "min", "argmin_l", "argmin_theta")


def plain(value: object) -> object:
    """Reduce reports to JSON-safe values; non-finite floats become null."""
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: plain(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": plain(value.real), "im": plain(value.imag)}
    if isinstance(value, Mapping):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, tuple) and hasattr(value, "_asdict"):
        return plain(value._asdict())
    if isinstance(value, (list, tuple, np.ndarray)):
        return [plain(v) for v in value]
    return value


def _number(value: float) -> str:
    return format(value, ".17g") if math.isfinite(value) else ""


def _json_float(value: float) -> str:
    text = _number(value)
    if not text:
        raise ValueError(f"non-finite float {value!r} is not valid JSON")
    # keep floats recognizable as floats when read back
    return text if any(ch in text for ch in ".e") else f"{text}.0"


def _encode(value: object, depth: int) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _json_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    inner, outer = "  " * (depth + 1), "  " * depth
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = (f"{inner}{json.dumps(str(k))}: {_encode(v, depth + 1)}" for k, v in value.items())
        return "{\n" + ",\n".join(items) + f"\n{outer}}}"
    if isinstance(value, list):
        if not value:
            return "[]"
        items = (f"{inner}{_encode(v, depth + 1)}" for v in value)
        return "[\n" + ",\n".join(items) + f"\n{outer}]"
    raise TypeError(f"cannot encode {type(value).__name__} as JSON")


def dump_json(doc: object) -> str:
    """Indented JSON text with every float written to 17 significant digits."""
    return _encode(plain(doc), 0) + "\n"


def render_json(result: object, config: Mapping[str, object] | None = None) -> str:
    """JSON text with the resolved configuration embedded next to the result."""
    return dump_json({"config": config or {}, "result": result})


def _verdict(passed: bool | None) -> str:
    if passed is None:
        return "n/a"
    return "true" if passed else "false"


def _csv_text(columns: tuple[str, ...], rows: Iterable[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def render_verification_csv(reports: Iterable[VerificationReport]) -> str:
    rows = (
        (
            r.params.n,
            _number(r.params.alpha),
            _number(r.params.beta),
            _number(r.params.c),
            r.m,
            _number(r.bound),
            _number(r.observed_min),
            _number(r.margin),
            _number(r.factorization_residual),
            _verdict(r.passed),
        )
        for r in reports
    )
    return _csv_text(VERIFICATION_COLUMNS, rows)


def render_cosmin_csv(rows: Iterable[tuple[float, CosineSumMinimum]]) -> str:
    return _csv_text(
        COSMIN_COLUMNS,
        ((_number(gamma), _number(found.value), found.l, _number(found.theta)) for gamma, found in rows),
    )


def write_output(text: str, path: Path | None) -> None:
    """Write to ``path`` (creating parents) or to stdout when no path is set."""
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    log.info("Wrote %s (%d chars)", path, len(text))
