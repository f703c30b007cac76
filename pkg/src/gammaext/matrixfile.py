"""Plain-text matrix files.

::

    labels: 1 2 3 g1
    2 4
    1 0 1 1
    0 1 1 0

The label line is optional (labels default to ``1..n``); blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from typing import Sequence

from .errors import EntryError, HeaderError, LabelLineError, ParseError
from .gf2 import Gf2Matrix


def parse_matrix(text: str) -> tuple[Gf2Matrix, list[str]]:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise HeaderError("missing 'rows cols' header", 1)
    labels = None
    pos = 0
    lineno, line = lines[0]
    if line.startswith("labels:"):
        labels = line[len("labels:"):].split()
        label_line = lineno
        pos = 1
        if pos == len(lines):
            raise HeaderError("missing 'rows cols' header", lineno + 1)
    lineno, line = lines[pos]
    fields = line.split()
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise HeaderError(f"expected 'rows cols', got {line!r}", lineno)
    n_rows, n_cols = map(int, fields)
    body = lines[pos + 1:]
    if len(body) < n_rows:
        raise EntryError(f"expected {n_rows} rows, found {len(body)}",
                         body[-1][0] + 1 if body else lineno + 1)
    if len(body) > n_rows:
        raise ParseError("unexpected content after the last row", body[n_rows][0])
    rows = []
    for lineno, line in body:
        entries = line.split()
        if len(entries) != n_cols:
            raise EntryError(f"expected {n_cols} entries, found {len(entries)}", lineno)
        word = 0
        for j, e in enumerate(entries):
            if e not in ("0", "1"):
                raise EntryError(f"entry {e!r} in column {j + 1} is not 0 or 1", lineno)
            if e == "1":
                word |= 1 << j
        rows.append(word)
    if labels is None:
        labels = [str(j) for j in range(1, n_cols + 1)]
    else:
        if len(labels) != n_cols:
            raise LabelLineError(f"{len(labels)} labels for {n_cols} columns", label_line)
        if len(set(labels)) != len(labels):
            raise LabelLineError("labels are not distinct", label_line)
    return Gf2Matrix(n_rows, n_cols, tuple(rows)), labels


def render_matrix(m: Gf2Matrix, labels: Sequence[str] | None = None) -> str:
    out = []
    if labels is not None:
        out.append("labels: " + " ".join(labels))
    out.append(f"{m.n_rows} {m.n_cols}")
    out.extend(" ".join(map(str, row)) for row in m.to_lists())
    return "\n".join(out) + "\n"


def read_matrix(path: str) -> tuple[Gf2Matrix, list[str]]:
    if path == "-":
        import sys
        return parse_matrix(sys.stdin.read())
    with open(path) as fh:
        return parse_matrix(fh.read())
