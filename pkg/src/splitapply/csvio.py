"""Comma-separated input and output without quoting.

The first row is a header. Fields never contain commas or quotes; a row whose
field count differs from the header is a parse error.
"""

from __future__ import annotations

import csv
import re

from splitapply.table import Column, Table, table_from_columns

_INT = re.compile(r"[+-]?\d+")


class CsvParseError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def read_rows(stream) -> tuple[list, list]:
    """Header and data rows as strings; blank lines are skipped."""
    reader = csv.reader(stream, quoting=csv.QUOTE_NONE, strict=True)
    header = None
    rows = []
    for row in reader:
        if not row or all(not f.strip() for f in row):
            continue
        row = [f.strip() for f in row]
        if header is None:
            header = row
            continue
        if len(row) != len(header):
            raise CsvParseError(
                f"expected {len(header)} fields, got {len(row)}", line=reader.line_num
            )
        rows.append((reader.line_num, row))
    if header is None:
        raise CsvParseError("input is empty; a header row is required")
    if any(not h for h in header):
        raise CsvParseError("header has an empty column name", line=1)
    if any('"' in h for h in header) or any('"' in f for _, r in rows for f in r):
        raise CsvParseError("quoted fields are not supported")
    return header, rows


def parse_column(raw, as_key=False) -> tuple:
    """Type a column of strings: integers, else floats (values) or bytes (keys).

    A non-key column that is neither integer nor float stays as bytes.
    """
    raw = list(raw)
    if all(_INT.fullmatch(s) for s in raw):
        return tuple(int(s) for s in raw)
    if as_key:
        return tuple(s.encode() for s in raw)
    try:
        return tuple(float(s) for s in raw)
    except ValueError:
        return tuple(s.encode() for s in raw)


def parse_floats(raw, lines) -> tuple:
    out = []
    for s, line in zip(raw, lines):
        try:
            out.append(float(s))
        except ValueError:
            raise CsvParseError(f"{s!r} is not a number", line=line) from None
    return tuple(out)


def read_table(stream, keys=()) -> Table:
    """Read CSV into a :class:`Table`; columns named in ``keys`` never become floats."""
    header, rows = read_rows(stream)
    fields = list(zip(*(r for _, r in rows))) or [() for _ in header]
    return table_from_columns(
        Column(name, parse_column(data, as_key=name in keys)) for name, data in zip(header, fields)
    )


def format_cell(x) -> str:
    if isinstance(x, bytes):
        return x.decode()
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_table(t: Table, stream) -> None:
    writer = csv.writer(stream, quoting=csv.QUOTE_NONE, lineterminator="\n")
    writer.writerow(t.names)
    for row in t.rows():
        writer.writerow([format_cell(x) for x in row])


def format_text_cell(x) -> str:
    if isinstance(x, float):
        return f"{x:.6g}"
    return format_cell(x)


def write_text(t: Table, stream) -> None:
    """Right-aligned columns with floats at six significant digits."""
    cells = [list(t.names)] + [[format_text_cell(x) for x in row] for row in t.rows()]
    widths = [max(len(r[j]) for r in cells) for j in range(len(t.names))]
    for r in cells:
        stream.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")
