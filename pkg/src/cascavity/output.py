"""Deterministic CSV and JSON emission.

Floats are written with Python's repr (the shortest decimal that round-trips
to the same float64), so identical inputs produce byte-identical files; the
convention is declared in every file's comment header.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Sequence


def format_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    v = float(v)
    if math.isnan(v):
        return "nan"
    return repr(v)


def header_lines(version: str, resolved_config: dict) -> list[str]:
    return [
        f"# cascavity {version}",
        "# float format: shortest round-trip decimal (Python repr)",
        "# config: " + json.dumps(resolved_config, sort_keys=True, separators=(",", ":")),
    ]


def write_csv(
    path,
    columns: Sequence[tuple[str, Sequence]],
    version: str,
    resolved_config: dict,
    extra_header: Sequence[str] = (),
) -> Path:
    """Write named columns as CSV with '#' comment headers; returns the path."""
    path = Path(path)
    names = [name for name, _ in columns]
    arrays = [list(values) for _, values in columns]
    n = len(arrays[0]) if arrays else 0
    if any(len(a) != n for a in arrays):
        raise ValueError("all CSV columns must have equal length")
    lines = header_lines(version, resolved_config)
    lines.extend(extra_header)
    lines.append(",".join(names))
    for i in range(n):
        lines.append(",".join(format_value(a[i]) for a in arrays))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def write_json(path, payload: dict) -> Path:
    path = Path(path)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path
