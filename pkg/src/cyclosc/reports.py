"""Deterministic serialization of command payloads to JSON, JSON lines and CSV.

Identical inputs must produce identical bytes: floats go through repr (the
json module and str() agree on that), dict insertion order is fixed by the
runner, residual lists are sorted by name, and complex numbers become
[re, im] pairs.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .algebra import AlgebraParams
from .fock import RelationReport
from .spectra import Pattern, ScanPoint, SpectrumReport, level_class_multiplicities

SCHEMA_VERSION = "1"


def to_native(obj):
    """Recursively convert numpy scalars/arrays and complex values to JSON-safe types."""
    if isinstance(obj, dict):
        return {k: to_native(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_native(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_native(v) for v in obj.tolist()]
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def algebra_dict(params: AlgebraParams | None, lam: int | None = None) -> dict:
    if params is None:
        return {"lambda": int(lam) if lam is not None else None, "alpha": None}
    return {"lambda": int(params.lam), "alpha": [float(a) for a in params.alpha]}


def relation_entries(report: RelationReport) -> list[dict]:
    return [
        {"name": e.name, "value": float(e.residual), "interior_dim": int(e.interior_dim)}
        for e in sorted(report.entries, key=lambda e: e.name)
    ]


def witness_entries(report: RelationReport) -> list[dict]:
    return [
        {"name": w.name, "value": float(w.value), "floor": float(w.floor)}
        for w in sorted(report.witnesses, key=lambda w: w.name)
    ]


def pattern_to_dict(pattern: Pattern | None) -> dict | None:
    if pattern is None:
        return None
    out = {"kind": pattern.kind}
    if pattern.kind == "fold-above":
        out["multiplicity"] = int(pattern.multiplicity)
        out["threshold"] = float(pattern.threshold)
    elif pattern.kind == "mixed":
        out["description"] = pattern.description
    return out


def spectrum_results(report: SpectrumReport) -> dict:
    mults = level_class_multiplicities(report)
    return {
        "levels": [
            {
                "energy": float(lv.energy),
                "k": int(lv.k),
                "mu": int(lv.mu),
                "multiplicity": int(m),
            }
            for lv, m in zip(report.levels, mults)
        ],
        "classes": [
            {"energy": float(c.energy), "multiplicity": int(c.multiplicity)}
            for c in report.classes
        ],
        "pattern": pattern_to_dict(report.pattern),
    }


def scan_point_dict(pt: ScanPoint) -> dict:
    return {
        "alpha_head": [float(v) for v in pt.alpha_head],
        "status": pt.status,
        "pattern": pattern_to_dict(pt.pattern),
        "detail": pt.detail,
    }


def emit_report(payload: dict, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "jsonl":
        points = (payload.get("results") or {}).get("points")
        if points is None:
            raise ValueError("jsonl output needs scan results")
        lines = [json.dumps(pt, separators=(",", ":")) for pt in points]
        return ("\n".join(lines) + "\n").encode() if lines else b""
    if fmt == "csv":
        levels = (payload.get("results") or {}).get("levels")
        if levels is None:
            raise ValueError("csv output needs spectrum results")
        sio = io.StringIO()
        writer = csv.writer(sio, lineterminator="\n")
        writer.writerow(["energy", "k", "mu", "multiplicity"])
        for lv in levels:
            writer.writerow([lv["energy"], lv["k"], lv["mu"], lv["multiplicity"]])
        return sio.getvalue().encode()
    raise ValueError(f"unknown output format {fmt!r}")
