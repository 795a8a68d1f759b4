"""Canonical JSON serialization.

Every JSON document the engine emits (CLI ``--json`` output, service
response bodies, saved scenario files) goes through :func:`canonical_dumps`
so identical values always serialize to identical bytes:

- object keys sorted,
- compact separators,
- numbers rendered with at most 6 fractional digits and no trailing zeros
  (``100.0`` -> ``100``, ``53.750`` -> ``53.75``),
- non-finite numbers rejected.
"""

from __future__ import annotations

import json
import math
from typing import Any


def format_number(value: int | float) -> str:
    if isinstance(value, bool):  # bool is an int subclass; keep it out
        raise TypeError("booleans are not numbers")
    if isinstance(value, int):
        return str(value)
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite number: {value!r}")
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    if text in ("", "-0"):
        return "0"
    return text


def canonical_dumps(value: Any) -> str:
    """Serialize ``value`` to a canonical compact JSON string."""
    out: list[str] = []
    _write(value, out)
    return "".join(out)


def _write(value: Any, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, (int, float)):
        out.append(format_number(value))
    elif isinstance(value, dict):
        out.append("{")
        for i, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"object keys must be strings, got {key!r}")
            if i:
                out.append(",")
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(":")
            _write(value[key], out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _write(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot canonically serialize {type(value).__name__}")
