"""Uniform result reporting for the command line tools.

Every command emits one Report on stdout: the command name, its inputs,
a boolean pass flag (serialized under the key "pass"), a details payload
carrying the op-specific findings (counterexamples included whenever
pass is false), and the wall-clock runtime.  Serialization is
deterministic: keys are sorted and every exact value has a canonical
text form, so two runs differ at most in runtime_ms.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any

from .exact import format_rational
from .perm import Permutation, PermutationGroup


@dataclasses.dataclass
class Report:
    command: str
    inputs: dict
    passed: bool
    details: object
    runtime_ms: int


def jsonable(value: Any) -> Any:
    """Recursively convert exact-arithmetic and group-theory values to
    plain JSON data."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Permutation):
        return value.cycle_string()
    if isinstance(value, PermutationGroup):
        return {"degree": value.degree, "order": value.order}
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: jsonable(getattr(value, f.name))
                for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "entries") and hasattr(value, "rows"):
        return [[format_rational(value[(i, j)]) for j in range(value.cols)]
                for i in range(value.rows)]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def render_report(report: Report) -> str:
    doc = {
        "command": report.command,
        "inputs": jsonable(report.inputs),
        "pass": report.passed,
        "details": jsonable(report.details),
        "runtime_ms": report.runtime_ms,
    }
    return json.dumps(doc, sort_keys=True, indent=2)
