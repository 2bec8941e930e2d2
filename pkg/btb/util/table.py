import csv
import io
from fractions import Fraction
from pathlib import Path
from typing import Union, List, Dict, Any, Optional, Sequence

from btb.util.serializer import to_json


FORMATS = ("json", "csv", "table")


def format_cell(value: Any) -> str:
    """
    Exact text of a table cell, rationals as `num/den`
    """
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_cell(v) for v in value) + "]"
    if value is None:
        return ""
    return str(value)


def render_table(
        rows: List[Dict[str, Any]],
        format: str,
        data: Optional[dict] = None,
        summary: Sequence[str] = (),
) -> str:
    """
    Render command output.

    :param rows: list of dicts with identical keys
    :param format: one of `FORMATS`
    :param data: the complete result, used for `json` (defaults to `{"rows": rows}`)
    :param summary: lines printed below the `table` format
    """
    if format == "json":
        return to_json(data if data is not None else {"rows": rows}, indent=2) + "\n"

    elif format == "csv":
        return _render_csv(rows)

    elif format == "table":
        return _render_text(rows, summary)

    else:
        raise ValueError(f"Unrecognized format '{format}', expected one of {', '.join(FORMATS)}")


def write_output(text: str, filename: Optional[Union[str, Path]] = None, file=None):
    if filename:
        Path(filename).write_text(text)
    else:
        file.write(text)


def _render_csv(rows: List[Dict[str, Any]]) -> str:
    fp = io.StringIO()
    if rows:
        writer = csv.DictWriter(fp, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: format_cell(value) for key, value in row.items()})
    return fp.getvalue()


def _render_text(rows: List[Dict[str, Any]], summary: Sequence[str]) -> str:
    lines = []
    if rows:
        keys = list(rows[0].keys())
        cells = [[format_cell(row[key]) for key in keys] for row in rows]
        widths = [
            max(len(key), *(len(c[i]) for c in cells))
            for i, key in enumerate(keys)
        ]
        lines.append("  ".join(key.ljust(w) for key, w in zip(keys, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for c in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip())
    if summary:
        if lines:
            lines.append("")
        lines.extend(summary)
    return "\n".join(lines) + "\n"
