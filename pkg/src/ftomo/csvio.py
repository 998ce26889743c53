"""Deterministic CSV emission: fixed formatting, fixed ordering, '\n' rows."""

import numpy as np


def fmt(v):
    """One CSV cell: 17 significant digits for floats, '1'/'0' for booleans."""
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, str):
        return v
    return f"{float(v):.17g}"


def rows_to_text(header, rows, comments=()):
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    lines.extend(f"# {c}" for c in comments)
    return "\n".join(lines) + "\n"


def write_rows(path, header, rows, comments=()):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(rows_to_text(header, rows, comments))
