import csv
import io
import json
import math
from typing import Any

from .config import RunConfig

__all__: list[str] = ["RESULT_COLUMNS", "result_rows", "format_results", "format_table"]

# Leading columns of every result row; the config fingerprint follows
RESULT_COLUMNS: tuple[str, ...] = (
    "quantity",
    "mean",
    "std_error",
    "reference",
    "replicates",
    "beta",
    "b",
    "k",
    "seed",
    "lattice_reference",
    "extras",
    "notes",
)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return "nan" if math.isnan(value) else repr(value)
    if isinstance(value, dict):
        return ";".join(f"{key}={_cell(val)}" for key, val in value.items())
    return str(value)


def _json_value(value: Any) -> Any:
    """Non-finite floats become null, which JSON can represent."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _json_value(val) for key, val in value.items()}
    if isinstance(value, list):
        return [_json_value(val) for val in value]
    return value


def result_rows(estimates, config: RunConfig) -> list[dict[str, Any]]:
    """One row per estimate carrying the full config fingerprint."""
    fingerprint = config.fingerprint()
    rows = []
    for estimate in estimates:
        row = estimate.to_row()
        row["extras"] = dict(estimate.extras)
        for key in ("beta", "b", "k", "seed"):
            row[key] = getattr(config, key)
        for key, value in fingerprint.items():
            row.setdefault(key, value)
        rows.append(row)
    return rows


def format_table(
    rows: list[dict[str, Any]], columns: list[str], fmt: str, meta: dict | None = None
) -> str:
    """Render rows as CSV (RFC 4180 quoting) or as one JSON object."""
    if fmt == "json":
        results = [{c: _json_value(row.get(c)) for c in columns} for row in rows]
        payload: dict[str, Any] = {"results": results}
        if meta is not None:
            payload["config"] = _json_value(meta)
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buffer.getvalue()


def format_results(estimates, config: RunConfig) -> str:
    rows = result_rows(estimates, config)
    extra = [c for c in config.fingerprint() if c not in RESULT_COLUMNS]
    columns = list(RESULT_COLUMNS) + extra
    return format_table(rows, columns, config.format, meta=config.echo())
