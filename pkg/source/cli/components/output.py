import csv
import io
import json
import math
import sys
from source.quantum.utils import format_float


def _cell(value):
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _json_value(value):
    """Non-finite floats become "inf", "-inf" or "nan", as in the CSV cells."""
    if isinstance(value, float) and not math.isfinite(value):
        return format_float(value)
    return value


def render(columns, rows, fmt: str, summary: dict = None) -> str:
    """
    CSV: a header row, full-precision data rows and one trailing '# key=value'
    line per summary entry. JSON: {"columns", "rows", "summary"}.
    """
    if fmt == "json":
        document = {
            "columns": list(columns),
            "rows": [[_json_value(v) for v in r] for r in rows],
            "summary": {k: _json_value(v) for k, v in (summary or {}).items()},
        }
        return json.dumps(document, indent=2, allow_nan=False) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    for key, value in (summary or {}).items():
        buffer.write(f"# {key}={_cell(value)}\n")
    return buffer.getvalue()


def emit(text: str, out=None):
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
