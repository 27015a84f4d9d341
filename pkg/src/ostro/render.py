"""Text renderings of the array (garden) and of the tower with its walls.

Garden: the wall column A[m][0] followed by columns 1..cols.
Tower: columns n = 1-left .. right with '|' at the right wall (between n=0
and n=1), ':' at the red wall when it differs from the left wall, '|' at the
left wall, and the row label (lsd first) at the end. Palindromic rows get an
underline from the left wall to the right wall: '=' when the row contains a
zero, '-' otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .numer import _ctx
from .towers import Unsupported, classify_palindrome, tower_row, wall_profile

FORMATS = ("ascii", "csv", "json")


@dataclass(frozen=True)
class RenderSpec:
    d: int
    rows: int
    cols_right: int = 8
    cols_left: int = 0
    format: str = "ascii"
    labels: bool = False
    underline: bool = False
    walls: bool = True

    def __post_init__(self):
        if self.rows < 0:
            raise ValueError(f"rows must be >= 0, got {self.rows}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.cols_right < 0 or self.cols_left < 0:
            raise ValueError("column counts must be >= 0")


def label(row) -> str:
    """The row word written lsd first, as in the tower's label column."""
    sep = "" if row.d <= 9 else ","
    return sep.join(str(x) for x in row.word.digits)


def row_record(ctx, m: int, lo: int, hi: int, walls: bool = True) -> dict:
    ctx = _ctx(ctx)
    row = tower_row(ctx, m)
    rec = {
        "m": m,
        "word": row.word.msd(ctx.d),
        "label": label(row),
        "wall": row.entry(0),
        "terms": row.window(lo, hi) if hi >= lo else [],
        "red_col": row.red_col,
    }
    if walls and ctx.d >= 2:
        wp = wall_profile(ctx, m)
        pc = classify_palindrome(ctx, m)
        rec["offset_i"] = wp.offset_i
        rec["left_col"] = wp.left_col
        rec["palindrome"] = {"kind": pc.kind, "multiplier": pc.multiplier_text()}
    return rec


def _table_json(d: int, lo: int, hi: int, records: list[dict]) -> str:
    return json.dumps({"d": d, "columns": [lo, hi], "rows": records}, indent=1) + "\n"


def render_garden(spec: RenderSpec) -> str:
    ctx = _ctx(spec.d)
    hi = spec.cols_right
    if spec.format == "json":
        recs = [row_record(ctx, m, 1, hi, walls=spec.walls) for m in range(1, spec.rows + 1)]
        return _table_json(ctx.d, 1, hi, recs)
    grid = [tower_row(ctx, m).window(0, hi) for m in range(1, spec.rows + 1)]
    if spec.format == "csv":
        return "".join(",".join(map(str, r)) + "\n" for r in grid)
    if not grid:
        return ""
    widths = [max(len(str(r[j])) for r in grid) for j in range(hi + 1)]
    lines = []
    for r in grid:
        cells = [str(v).rjust(w) for v, w in zip(r, widths)]
        lines.append(cells[0] + (" | " + " ".join(cells[1:]) if hi else " |"))
    return "\n".join(lines) + "\n"


def render_tower(spec: RenderSpec) -> str:
    ctx = _ctx(spec.d)
    if ctx.d < 2:
        raise Unsupported("tower walls are defined for d >= 2")
    lo, hi = 1 - spec.cols_left, spec.cols_right
    recs = [row_record(ctx, m, lo, hi) for m in range(1, spec.rows + 1)]
    if spec.format == "json":
        return _table_json(ctx.d, lo, hi, recs)
    if spec.format == "csv":
        head = ["m", "label"] if spec.labels else ["m"]
        head += [str(n) for n in range(lo, hi + 1)] + ["red_col", "left_col", "palindrome"]
        out = [",".join(head)]
        for r in recs:
            cells = [str(r["m"])] + ([r["label"]] if spec.labels else [])
            cells += [str(v) for v in r["terms"]]
            cells += [str(r["red_col"]), str(r["left_col"]), r["palindrome"]["kind"]]
            out.append(",".join(cells))
        return "\n".join(out) + "\n"
    if not recs:
        return ""
    ncol = hi - lo + 1
    width = max((len(str(v)) for r in recs for v in r["terms"]), default=1)
    lines = []
    for r in recs:
        text, start = "", {}
        for j, v in enumerate(r["terms"]):
            n = lo + j
            if j:
                if n == 1 or n == r["left_col"]:
                    sep = " | "
                elif n == r["red_col"]:
                    sep = " : "
                else:
                    sep = "   "
                text += sep
            start[n] = len(text)
            text += str(v).rjust(width)
        if spec.labels:
            text += "   " + r["label"]
        lines.append(text.rstrip())
        kind = r["palindrome"]["kind"]
        if spec.underline and kind != "none" and ncol:
            a = start.get(max(r["left_col"], lo), 0)
            b = start[0] + width if 0 in start else len(text)
            if 0 >= lo and r["left_col"] <= hi:
                ch = "=" if kind == "deedee" else "-"
                lines.append(" " * a + ch * (b - a))
    return "\n".join(lines) + "\n"
