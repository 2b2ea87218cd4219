"""Live reconstruction of the reference tables for ``rangesplit tabulate``.

Nothing here stores a cell: positions come from evaluating expressions with
the DSL, landmarks from :func:`rangesplit.splitter.landmarks`, and formula
text from the splitter's boundary constants.

Output formats:

``table``
    aligned text, one block per section.
``tsv``
    per section a ``# title`` line, a header line, then one line per row;
    sections are separated by a blank line.
``json``
    a JSON array of flat record objects (see each builder for the keys).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from . import intdiv, splitter
from .errors import DomainError
from .splitter import SplitPolicy

FORMATS = ("table", "tsv", "json")


@dataclass
class Table:
    title: str
    columns: List[str]
    rows: List[List[str]]
    records: List[dict] = field(default_factory=list)


def split_range_texts(policy: SplitPolicy, var: str = "n") -> Tuple[str, str]:
    """``(left half, right half)`` as range expressions over a 0-based frame."""
    left_end, right_start = splitter.LENGTH_BOUNDS[policy]
    return f"0 <= i < {left_end.render(var)}", f"{right_start.render(var)} <= i < {var}"


# Rows of the for-loop table, in the order they are usually quoted.
LOOP_POLICIES = (SplitPolicy.NATURAL, SplitPolicy.LEFT_PLUS, SplitPolicy.RIGHT_PLUS, SplitPolicy.CUT_RIGHT)

_DIVISION_NAMES = {
    SplitPolicy.NATURAL: "Natural division",
    SplitPolicy.LEFT_PLUS: "Left+ division",
    SplitPolicy.RIGHT_PLUS: "Right+ division",
    SplitPolicy.CUT_LEFT: "Cut out center, left cut",
    SplitPolicy.CUT_RIGHT: "Cut out center, right cut",
}

ROUNDING_PLUS_MINUS_ONE = ("(n-1)/2", "n/2", "(n+1)/2", "(s-1)/2", "s/2", "(s+1)/2")
HALF_PLUS_MINUS_ONE = ("n/2-1", "n/2", "n/2+1", "s/2-1", "s/2", "s/2+1")


def landmark_positions(n: int, exprs: Sequence[str]) -> Dict[str, int]:
    env = intdiv.Bindings(n)
    return {text: intdiv.eval_expr(text, env) for text in exprs}


def landmark_table(table_id: str, n: int, exprs: Sequence[str]) -> Table:
    """Where each expression lands in the array ``0 1 ... n-1``.

    Columns run over every position reached, so out-of-frame values such as
    ``-1`` get their own column.  Records: ``table, array, n, expr, position,
    in_frame``; the landmark row uses ``expr`` = ``el``, ``c`` or ``rs``.
    """
    marks = splitter.landmarks(n)
    placed = [("el", marks.el)]
    if marks.center is not None:
        placed.append(("c", marks.center))
    placed.append(("rs", marks.rs))
    values = landmark_positions(n, exprs)

    lo = min([0] + list(values.values()))
    hi = max([n - 1] + list(values.values()))
    positions = list(range(lo, hi + 1))
    array = "".join(str(i) for i in range(n))

    def row(label, items):
        cells = [""] * len(positions)
        for text, pos in items:
            cells[pos - lo] = text
        return [label] + cells

    rows = [row("landmarks", placed)]
    rows += [row(text, [(text, values[text])]) for text in exprs]
    records = [
        {"table": table_id, "array": array, "n": n, "expr": text, "position": pos, "in_frame": 0 <= pos < n}
        for text, pos in placed + list(values.items())
    ]
    return Table(f"{table_id}: positions in {array} (n={n}, s={n - 1})", ["row"] + [str(p) for p in positions],
                 rows, records)


def final_table() -> Table:
    rows, records = [], []
    for policy in splitter.ALL_POLICIES:
        left, right = split_range_texts(policy)
        rows.append([_DIVISION_NAMES[policy], left, right])
        records.append({"table": "final", "policy": policy.value, "left": left, "right": right})
    return Table("final: adjustment for comparators < and <=", ["division", "left half", "right half"], rows, records)


def loops_table() -> Table:
    rows, records = [], []
    for policy in LOOP_POLICIES:
        left_end, right_start = splitter.LENGTH_BOUNDS[policy]
        left = f"for (int i = 0; i < {left_end.render()}; i++)"
        right = f"for (int i = {right_start.render()}; i < n; i++)"
        name = "Right cut-out" if policy is SplitPolicy.CUT_RIGHT else _DIVISION_NAMES[policy]
        rows.append([name, left, right])
        records.append({"table": "loops", "policy": policy.value, "left": left, "right": right})
    return Table("loops: for loops in C/C++ for all divisions", ["division", "left half", "right half"], rows, records)


def tabulate(which: str) -> List[Table]:
    if which == "t1":
        return [landmark_table("t1", 5, ROUNDING_PLUS_MINUS_ONE)]
    if which == "t2":
        return [landmark_table("t2", 6, ROUNDING_PLUS_MINUS_ONE)]
    if which == "t3":
        return [landmark_table("t3", 5, HALF_PLUS_MINUS_ONE)]
    if which == "t4":
        # n = 2 is the companion case where s/2-1 leaves the frame
        return [landmark_table("t4", 6, HALF_PLUS_MINUS_ONE), landmark_table("t4", 2, HALF_PLUS_MINUS_ONE)]
    if which == "final":
        return [final_table()]
    if which == "loops":
        return [loops_table()]
    raise DomainError(f"unknown table {which!r}; choose from {', '.join(TABLE_IDS)}")


TABLE_IDS = ("t1", "t2", "t3", "t4", "final", "loops")


def render_text(columns: Sequence[str], rows: Sequence[Sequence[str]], title: str = "") -> str:
    widths = [max(len(str(r[i])) for r in [columns] + list(rows)) for i in range(len(columns))]
    lines = [title] if title else []
    lines.append("  ".join(str(c).ljust(w) for c, w in zip(columns, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def render(tables: Sequence[Table], fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps([rec for t in tables for rec in t.records], indent=2)
    if fmt == "tsv":
        blocks = []
        for t in tables:
            lines = [f"# {t.title}", "\t".join(t.columns)]
            lines += ["\t".join(r) for r in t.rows]
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks)
    if fmt == "table":
        return "\n\n".join(render_text(t.columns, t.rows, t.title) for t in tables)
    raise DomainError(f"unknown format {fmt!r}")
