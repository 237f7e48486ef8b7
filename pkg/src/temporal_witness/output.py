"""Deterministic CSV/JSON emission."""

from __future__ import annotations

import json
from pathlib import Path


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


def csv_text(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_text(path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # newline="" keeps byte-identical output across platforms
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path


def rows_as_records(header, rows) -> list[dict]:
    return [dict(zip(header, (float(v) if not isinstance(v, str) else v for v in row))) for row in rows]
