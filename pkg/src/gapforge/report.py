"""Consolidated run reports written by the CLI."""
from __future__ import annotations

import json


def emit_report(config: dict, steps=(), timings=None) -> dict:
    """Config echo, then step reports in order, then wall-clock timings.

    Everything except ``timings`` is a pure function of the config and inputs.
    """
    from .io import to_json

    out = {"type": "run_report", "config": dict(config), "steps": []}
    for step in steps:
        out["steps"].append(step if isinstance(step, dict) else to_json(step))
    out["timings"] = dict(timings or {})
    return out


def strip_timings(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timings"}


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
