"""CSV interchange for 1 - delta_l tables, the bundled reference values and an SVG chart."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, TextIO

from .verifier import DeltaRecord

VERIFY_HEADER = ["ell", "nodes", "worst_z_numerator", "worst_z_denominator_log2", "one_minus_delta"]


class TableError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ReferenceValue:
    ell: int
    one_minus_delta: float
    tolerance: float


def reference_values() -> list[ReferenceValue]:
    """The bundled published table for l = 1..145 with its agreement tolerances."""
    text = resources.files("treecodes.data").joinpath("reference_delta.csv").read_text()
    rows = csv.DictReader(line for line in text.splitlines() if not line.startswith("#"))
    return [ReferenceValue(int(r["ell"]), float(r["one_minus_delta"]), float(r["tolerance"]))
            for r in rows]


def format_record(rec: DeltaRecord) -> list[str]:
    return [str(rec.ell), str(rec.nodes), str(rec.worst_z), str(rec.ell),
            f"{rec.one_minus_delta:.8f}"]


def write_records(records: Iterable[DeltaRecord], out: TextIO) -> None:
    """Write the verify CSV, flushing after every row."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(VERIFY_HEADER)
    out.flush()
    for rec in records:
        w.writerow(format_record(rec))
        out.flush()


def read_series(text: str) -> list[tuple[int, float]]:
    """(ell, 1 - delta_ell) pairs from a verify CSV or the reference table.

    Lines starting with '#' are ignored; the header must name ``ell`` and
    ``one_minus_delta``.
    """
    lines = [(i, line) for i, line in enumerate(text.splitlines(), start=1)
             if line.strip() and not line.startswith("#")]
    if not lines:
        raise TableError("input is empty")
    header_line, header = lines[0]
    cols = next(csv.reader([header]))
    if "ell" not in cols or "one_minus_delta" not in cols:
        raise TableError("header must contain 'ell' and 'one_minus_delta'", header_line)
    ie, iv = cols.index("ell"), cols.index("one_minus_delta")
    series = []
    for lineno, line in lines[1:]:
        row = next(csv.reader([line]))
        if len(row) != len(cols):
            raise TableError(f"expected {len(cols)} fields, got {len(row)}", lineno)
        try:
            series.append((int(row[ie]), float(row[iv])))
        except ValueError as exc:
            raise TableError(str(exc), lineno) from None
    if not series:
        raise TableError("no data rows", header_line)
    return series


def plot_data(series: list[tuple[int, float]]) -> str:
    return "".join(f"{ell} {value:.8f}\n" for ell, value in series)


def svg_chart(series: list[tuple[int, float]], width: int = 640, height: int = 360) -> str:
    """A static line chart of 1 - delta_l against l, scaled via viewBox."""
    pad = 40
    xs = [e for e, _ in series]
    x0, x1 = min(xs), max(xs)
    y0, y1 = -1.0, 1.0
    sx = (width - 2 * pad) / max(x1 - x0, 1)
    sy = (height - 2 * pad) / (y1 - y0)

    def px(e, v):
        return f"{pad + (e - x0) * sx:.2f},{height - pad - (v - y0) * sy:.2f}"

    points = " ".join(px(e, v) for e, v in series)
    zero = height - pad - (0 - y0) * sy
    buf = io.StringIO()
    buf.write(f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">\n')
    buf.write(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>\n')
    buf.write(f'<line x1="{pad}" y1="{zero:.2f}" x2="{width - pad}" y2="{zero:.2f}" '
              'stroke="#bbb" stroke-width="1"/>\n')
    buf.write(f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>\n')
    buf.write(f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" '
              'stroke="black"/>\n')
    buf.write(f'<text x="{pad}" y="{pad - 10}" font-size="12">1 - delta (l = {x0}..{x1})</text>\n')
    buf.write(f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{points}"/>\n')
    buf.write("</svg>\n")
    return buf.getvalue()
