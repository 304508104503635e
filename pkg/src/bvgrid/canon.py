"""Canonical JSON encoding: sorted keys, 17-significant-digit floats.

Reports and function files must be byte-identical across runs, so we do not
rely on ``json.dumps`` float formatting.
"""

from __future__ import annotations

import json
import math
from typing import Any


def format_number(x: float) -> str:
    if isinstance(x, bool):  # bool is an int subclass; handled by caller
        raise TypeError("bool is not a number here")
    if isinstance(x, int):
        return str(x)
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite numbers are not serializable")
    return format(x, ".17g")


def canonical_dumps(obj: Any) -> str:
    """Serialize ``obj`` to canonical JSON text (no trailing newline)."""
    parts: list[str] = []
    _write(obj, parts)
    return "".join(parts)


def canonical_dump_bytes(obj: Any) -> bytes:
    return (canonical_dumps(obj) + "\n").encode("utf-8")


def _write(obj: Any, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, float)):
        out.append(format_number(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for k, item in enumerate(obj):
            if k:
                out.append(",")
            _write(item, out)
        out.append("]")
    elif isinstance(obj, dict):
        out.append("{")
        for k, key in enumerate(sorted(obj)):
            if not isinstance(key, str):
                raise TypeError(f"non-string key: {key!r}")
            if k:
                out.append(",")
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(":")
            _write(obj[key], out)
        out.append("}")
    else:
        raise TypeError(f"cannot canonicalize {type(obj).__name__}")
