"""
Deterministic CSV and text emission.

Floats are written with 17 significant digits, complex columns are split
into <name>_re and <name>_im, booleans are 'true'/'false' and a missing
value is an empty field. Lines end in '\n'.
"""

import csv
import io
from typing import Dict, Iterable, List, Optional, Sequence, TextIO

Row = Dict[str, object]


def format_value(value: object) -> str:
    """Text form of a single scalar."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format(value, '.17g')
    return str(value)


def _columns(rows: Sequence[Row]) -> List[str]:
    """Keys in first-seen order across all rows."""
    seen: Dict[str, None] = {}
    for row in rows:
        for key in row:
            seen.setdefault(key, None)
    return list(seen)


def _complex_columns(rows: Sequence[Row], columns: Iterable[str]) -> set:
    return {c for c in columns if any(isinstance(row.get(c), complex) for row in rows)}


def expand_rows(rows: Sequence[Row], columns: Optional[Sequence[str]] = None):
    """
    Header and string cells with complex columns split in two.

    Returns:
        (header, list of string rows)
    """
    columns = list(columns) if columns is not None else _columns(rows)
    split = _complex_columns(rows, columns)
    header: List[str] = []
    for c in columns:
        header.extend([f"{c}_re", f"{c}_im"] if c in split else [c])

    cells = []
    for row in rows:
        out = []
        for c in columns:
            value = row.get(c)
            if c in split:
                if value is None:
                    out.extend(['', ''])
                else:
                    value = complex(value)
                    out.extend([format_value(value.real), format_value(value.imag)])
            else:
                out.append(format_value(value))
        cells.append(out)
    return header, cells


def write_csv(rows: Sequence[Row], stream: TextIO, columns: Optional[Sequence[str]] = None) -> None:
    """Write rows as CSV; the header row is written even for an empty table."""
    header, cells = expand_rows(rows, columns)
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(cells)


def to_csv(rows: Sequence[Row], columns: Optional[Sequence[str]] = None) -> str:
    buffer = io.StringIO()
    write_csv(rows, buffer, columns)
    return buffer.getvalue()


def write_text(report: Row, stream: TextIO) -> None:
    """Write a report as 'key: value' lines."""
    for key, value in report.items():
        if isinstance(value, complex):
            stream.write(f"{key}: {format_value(value.real)} {format_value(value.imag)}i\n")
        else:
            stream.write(f"{key}: {format_value(value)}\n")


def write_text_table(rows: Sequence[Row], stream: TextIO) -> None:
    """Text form of a table: one 'key: value' block per row, blank line between."""
    for i, row in enumerate(rows):
        if i:
            stream.write('\n')
        write_text(row, stream)
