"""Plain-text formats for tables and rings, and the ASCII table rendering.

Cayley table file::

    # comment
    elements: 24 12 36 48
    36 48 24 12
    ...

Ring file: the ``elements:`` line, then ``add:`` followed by n rows, then
``mul:`` followed by n rows.
"""
from __future__ import annotations

from .errors import TableFormatError
from .magma import CayleyTable, new_table
from .rings import RingTable, new_ring


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _ints(line: str, no: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise TableFormatError(f"expected integers, got {line!r}", no) from None


def _header(lines) -> list[int]:
    try:
        no, line = next(lines)
    except StopIteration:
        raise TableFormatError("missing 'elements:' line") from None
    key, sep, rest = line.partition(":")
    if not sep or key.strip() != "elements":
        raise TableFormatError("first line must be 'elements: ...'", no)
    labels = _ints(rest, no)
    if not labels:
        raise TableFormatError("no elements listed", no)
    return labels


def _rows(lines, n: int, what: str) -> list[list[int]]:
    rows = []
    for _ in range(n):
        try:
            no, line = next(lines)
        except StopIteration:
            raise TableFormatError(f"{what}: expected {n} rows, got {len(rows)}") from None
        row = _ints(line, no)
        if len(row) != n:
            raise TableFormatError(f"{what}: row has {len(row)} entries, expected {n}", no)
        rows.append(row)
    return rows


def _marker(lines, name: str):
    try:
        no, line = next(lines)
    except StopIteration:
        raise TableFormatError(f"missing '{name}:' section") from None
    if line.rstrip(":").strip() != name or not line.endswith(":"):
        raise TableFormatError(f"expected '{name}:'", no)


def _no_trailing(lines):
    for no, line in lines:
        raise TableFormatError(f"unexpected trailing line {line!r}", no)


def parse_table(text: str) -> CayleyTable:
    lines = _lines(text)
    labels = _header(lines)
    rows = _rows(lines, len(labels), "table")
    _no_trailing(lines)
    return new_table(labels, rows)


def parse_ring(text: str) -> RingTable:
    lines = _lines(text)
    labels = _header(lines)
    _marker(lines, "add")
    add = _rows(lines, len(labels), "add")
    _marker(lines, "mul")
    mul = _rows(lines, len(labels), "mul")
    _no_trailing(lines)
    return new_ring(labels, add, mul)


def format_table(t: CayleyTable) -> str:
    """Serialize in the Cayley file format (round-trips through parse_table)."""
    out = ["elements: " + " ".join(map(str, t.labels))]
    out += [" ".join(map(str, row)) for row in t.rows()]
    return "\n".join(out) + "\n"


def format_ring(rt: RingTable) -> str:
    out = ["elements: " + " ".join(map(str, rt.labels)), "add:"]
    out += [" ".join(map(str, row)) for row in rt.add.rows()]
    out.append("mul:")
    out += [" ".join(map(str, row)) for row in rt.mul.rows()]
    return "\n".join(out) + "\n"


def render_table(t: CayleyTable, op: str = "x") -> str:
    """Bordered multiplication table, labels right-aligned, one space between columns."""
    w = max(len(str(v)) for v in (*t.labels, op))
    cell = lambda v: str(v).rjust(w)  # noqa: E731
    head = cell(op) + " | " + " ".join(cell(v) for v in t.labels)
    rule = "-" * (w + 1) + "+" + "-" * (len(head) - w - 2)
    body = [cell(lab) + " | " + " ".join(cell(v) for v in row)
            for lab, row in zip(t.labels, t.rows())]
    return "\n".join([head, rule, *body]) + "\n"
