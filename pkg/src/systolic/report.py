"""Deterministic text, CSV and JSON rendering of command results."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

FORMATS = ("pretty", "csv", "json")


@dataclass(frozen=True)
class OutputSpec:
    format: str = "pretty"
    path: Optional[str] = None
    precision: int = 6

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if not 1 <= self.precision <= 15:
            raise ValueError(f"precision must lie in [1, 15], got {self.precision}")


@dataclass
class Table:
    name: str
    columns: Tuple[str, ...]
    rows: List[tuple]


@dataclass
class Report:
    scalars: List[Tuple[str, Any]] = field(default_factory=list)
    tables: List[Table] = field(default_factory=list)
    exit_code: int = 0

    def add(self, key: str, value: Any) -> "Report":
        self.scalars.append((key, value))
        return self

    def table(self, name: str, columns, rows) -> "Report":
        self.tables.append(Table(name, tuple(columns), [tuple(r) for r in rows]))
        return self


def format_number(x: Any, precision: int) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if x != 0 and abs(x) < 10.0 ** -min(precision, 4):
            return f"{x:.{precision}e}"
        return f"{x:.{precision}f}"
    return str(x)


def _json_value(x: Any, precision: int):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return format_number(x, precision)
    return str(x)


def render(report: Report, spec: OutputSpec) -> str:
    p = spec.precision
    if spec.format == "json":
        obj = {k: _json_value(v, p) for k, v in report.scalars}
        for t in report.tables:
            obj[t.name] = [{c: _json_value(v, p) for c, v in zip(t.columns, row)} for row in t.rows]
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if spec.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if report.tables:
            t = report.tables[0]
            writer.writerow(t.columns)
            writer.writerows([format_number(v, p) for v in row] for row in t.rows)
        else:
            writer.writerow(("key", "value"))
            writer.writerows((k, format_number(v, p)) for k, v in report.scalars)
        return buf.getvalue()
    lines = []
    for t in report.tables:
        cells = [list(t.columns)] + [[format_number(v, p) for v in row] for row in t.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(t.columns))]
        lines.append(f"[{t.name}]")
        lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)
        lines.append("")
    lines.extend(f"{k}: {format_number(v, p)}" for k, v in report.scalars)
    return "\n".join(lines) + "\n"


def emit(report: Report, spec: OutputSpec, stream) -> None:
    text = render(report, spec)
    if spec.path:
        with open(spec.path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stream.write(text)
