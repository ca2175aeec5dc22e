"""Report container shared by all CLI commands, with text/JSON/CSV renderers."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any, Callable

from . import __version__

Scalar = str | int | bool | None


def fmt_rational(x: Fraction | int) -> str:
    """Exact rational as ``p/q`` (``p`` when the denominator is 1)."""
    return str(Fraction(x))


@dataclass
class Report:
    command: str
    inputs: dict[str, Scalar]
    rows: list[dict[str, Scalar]]
    verdicts: list[str] = field(default_factory=list)
    summary: dict[str, Scalar] = field(default_factory=dict)
    version: str = __version__

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))

    def columns(self) -> list[str]:
        cols: list[str] = []
        for row in self.rows:
            cols += [k for k in row if k not in cols]
        return cols

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns(), lineterminator="\r\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return buf.getvalue()

    def to_text(self, row_format: Callable[[dict[str, Scalar]], str] | None = None) -> str:
        lines = [f"# {self.command} (sprigidity {self.version})"]
        lines += [f"# {k}: {_cell(v)}" for k, v in self.inputs.items()]
        if row_format is not None:
            lines += [row_format(r) for r in self.rows]
        elif self.rows:
            cols = self.columns()
            table = [cols] + [[_cell(r.get(c)) for c in cols] for r in self.rows]
            widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
            for row in table:
                lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        lines += [f"{k} = {_cell(v)}" for k, v in self.summary.items()]
        lines += [f"verdict: {v}" for v in self.verdicts]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str, row_format: Callable | None = None) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text(row_format)
        raise ValueError(f"unknown format {fmt!r}")


def _cell(v: Scalar) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files("sprigidity").joinpath("report.schema.json").read_text())
