"""Path, text and report serialization helpers"""

from __future__ import annotations

__all__ = [
    "FilePath",
    "resolve_path",
    "format_rational",
    "parse_rational",
    "to_jsonable",
    "dumps_json",
    "dumps_csv",
    "write_report",
]

import csv
import io
import json
import sys
from collections.abc import Mapping, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, TypeAlias

FilePath: TypeAlias = str | Path

# integers above this many digits are written as strings
_BIG_INT_DIGITS = 15


def resolve_path(path: FilePath) -> Path:
    """Expand user and resolve path."""
    return Path(path).expanduser().resolve()


def format_rational(x: Fraction | int) -> str:
    """Canonical "p/q" text, integers without a denominator."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e


def to_jsonable(obj: Any) -> Any:
    """Recursively convert reports to JSON-ready values."""
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, bool) or obj is None or isinstance(obj, float):
        return obj
    if isinstance(obj, int):
        return str(obj) if len(str(abs(obj))) > _BIG_INT_DIGITS else obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, str):
        return obj
    if isinstance(obj, Mapping):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (Sequence, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    try:
        return int(obj)
    except (TypeError, ValueError):
        return str(obj)


def dumps_json(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2)


def _csv_rows(payload: Any) -> list[dict[str, Any]]:
    data = to_jsonable(payload)
    if isinstance(data, Mapping):
        rows = next((v for v in data.values() if isinstance(v, list)), None)
        if rows is None:
            return [dict(data)]
        data = rows
    out = []
    for row in data:
        if isinstance(row, Mapping):
            out.append({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                        for k, v in row.items()})
        else:
            out.append({"value": row})
    return out


def dumps_csv(payload: Any) -> str:
    rows = _csv_rows(payload)
    fields = sorted({k for row in rows for k in row})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def write_report(payload: Any, path: FilePath | None = None, fmt: str = "json") -> str:
    """
    Serialize a report as JSON or CSV and write it to `path` (stdout if None).

    Args:
        payload (Any): Report object, mapping or list of rows.
        path (FilePath, optional): Output file. Defaults to None.
        fmt (str): 'json' or 'csv'. Defaults to 'json'.
    """
    if fmt == "json":
        text = dumps_json(payload) + "\n"
    elif fmt == "csv":
        text = dumps_csv(payload)
    else:
        raise ValueError(f"fmt must be 'json' or 'csv', got {fmt!r}")
    if path is None:
        sys.stdout.write(text)
    else:
        out = resolve_path(path)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
    return text
