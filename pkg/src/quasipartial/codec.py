"""Parse and emit the JSON documents the CLI reads.

Series:  {"M": int, "coeffs": [{"re": float, "im": float}, ...]}  (b_2 .. b_M)
Params:  {"n": int, "alpha": float, "beta": float, "c": float}
Kernel:  {"points": [{"re": .., "im": ..}, ...], "weights": [...]}
Grid:    {"cells": [{"params": {...}, "m": int}, ...], "spec_count": int, "seed": int}
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import InputFormatError, WorkbenchError
from .models import ClassParams, KernelSpec, NormalizedSeries

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepGrid:
    cells: tuple[tuple[ClassParams, int], ...]
    spec_count: int
    seed: int


def read_document(path: Path) -> object:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InputFormatError(str(path), f"invalid JSON ({e.msg} at line {e.lineno})") from None


def _require_mapping(doc: object, where: str) -> dict:
    if not isinstance(doc, dict):
        raise InputFormatError(where, "expected a JSON object")
    return doc


def _field(doc: dict, key: str, where: str) -> object:
    if key not in doc:
        raise InputFormatError(f"{where}{key}", "missing")
    return doc[key]


def _number(value: object, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputFormatError(where, f"expected a number, got {value!r}")
    return float(value)


def _integer(value: object, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputFormatError(where, f"expected an integer, got {value!r}")
    return value


def _complex(value: object, where: str) -> complex:
    entry = _require_mapping(value, where)
    return complex(
        _number(_field(entry, "re", f"{where}."), f"{where}.re"),
        _number(entry.get("im", 0.0), f"{where}.im"),
    )


def _list(value: object, where: str) -> list:
    if not isinstance(value, list):
        raise InputFormatError(where, "expected a JSON array")
    return value


def complex_to_document(value: complex) -> dict[str, float]:
    return {"re": float(value.real), "im": float(value.imag)}


def parse_series(doc: object, where: str = "") -> NormalizedSeries:
    doc = _require_mapping(doc, where or "series")
    order = _integer(_field(doc, "M", where), f"{where}M")
    raw = _list(_field(doc, "coeffs", where), f"{where}coeffs")
    coeffs = [_complex(entry, f"{where}coeffs[{i}]") for i, entry in enumerate(raw)]
    try:
        return NormalizedSeries(order, coeffs)
    except WorkbenchError as e:
        raise InputFormatError(f"{where}coeffs", str(e)) from None


def series_to_document(series: NormalizedSeries) -> dict:
    return {
        "M": series.truncation_order,
        "coeffs": [complex_to_document(b) for b in series.coeffs],
    }


def parse_params(doc: object, where: str = "") -> ClassParams:
    doc = _require_mapping(doc, where or "params")
    values = {
        "n": _integer(_field(doc, "n", where), f"{where}n"),
        "alpha": _number(_field(doc, "alpha", where), f"{where}alpha"),
        "beta": _number(_field(doc, "beta", where), f"{where}beta"),
        "c": _number(_field(doc, "c", where), f"{where}c"),
    }
    try:
        return ClassParams(**values)
    except WorkbenchError as e:
        raise InputFormatError(where.rstrip(".") or "params", str(e)) from None


def params_to_document(params: ClassParams) -> dict:
    return {"n": params.n, "alpha": params.alpha, "beta": params.beta, "c": params.c}


def parse_kernel(doc: object, where: str = "") -> KernelSpec:
    doc = _require_mapping(doc, where or "kernel")
    raw_points = _list(_field(doc, "points", where), f"{where}points")
    raw_weights = _list(_field(doc, "weights", where), f"{where}weights")
    points = [_complex(p, f"{where}points[{i}]") for i, p in enumerate(raw_points)]
    weights = [_number(w, f"{where}weights[{i}]") for i, w in enumerate(raw_weights)]
    try:
        return KernelSpec(points=tuple(points), weights=tuple(weights))
    except WorkbenchError as e:
        raise InputFormatError(where.rstrip(".") or "kernel", str(e)) from None


def kernel_to_document(spec: KernelSpec) -> dict:
    return {
        "points": [complex_to_document(x) for x in spec.points],
        "weights": list(spec.weights),
    }


def parse_grid(doc: object) -> SweepGrid:
    doc = _require_mapping(doc, "grid")
    raw_cells = _list(_field(doc, "cells", ""), "cells")
    cells = []
    for i, raw in enumerate(raw_cells):
        where = f"cells[{i}]."
        cell = _require_mapping(raw, where.rstrip("."))
        params = parse_params(_field(cell, "params", where), f"{where}params.")
        cells.append((params, _integer(_field(cell, "m", where), f"{where}m")))
    spec_count = _integer(doc.get("spec_count", 1), "spec_count")
    seed = _integer(doc.get("seed", 0), "seed")
    log.debug("parsed sweep grid: %d cells, %d kernels each", len(cells), spec_count)
    return SweepGrid(cells=tuple(cells), spec_count=spec_count, seed=seed)


def load_series(path: Path) -> NormalizedSeries:
    return parse_series(read_document(path))


def load_kernel(path: Path) -> KernelSpec:
    return parse_kernel(read_document(path))


def load_grid(path: Path) -> SweepGrid:
    return parse_grid(read_document(path))
