"""Parse deal-record files and render scored ledgers.

The CSV schema is a UTF-8 header row naming any of ``label``,
``cost_price``, ``reference_price``, ``settled_price`` (matched by name,
order free, unknown columns ignored with a warning), followed by one data
row per record. Decimals use a dot separator, empty cells mean "absent".

Rendering is deterministic: the same inputs always produce the same bytes.
JSON output carries raw shares at full precision next to the rounded
display percents so consumers never re-derive the rounding.
"""

from __future__ import annotations

import csv
import json
import warnings
from io import StringIO
from math import isfinite
from pathlib import Path
from typing import Any, Sequence

from .errors import ParseError
from .ledger import AttributedRecord, DealRecord, LedgerSummary

SCHEMA_VERSION = 1

RECORD_COLUMNS = ("label", "cost_price", "reference_price", "settled_price")
_NUMERIC_COLUMNS = RECORD_COLUMNS[1:]

SUMMARY_ROW_LABEL = "AVG"


def _as_text(source: Any) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            return source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    if isinstance(source, str):
        return source
    raise ParseError(f"cannot parse {type(source).__name__} as deal records")


def _parse_cell(raw: str | None, row: int, column: str) -> float | None:
    if raw is None or not raw.strip():
        return None
    try:
        value = float(raw)
    except ValueError:
        raise ParseError(
            f"row {row}, column {column!r}: cannot parse {raw.strip()!r} as a decimal"
        ) from None
    if not isfinite(value):
        raise ParseError(f"row {row}, column {column!r}: value must be finite")
    return value


def parse_deal_csv(source: Any) -> list[DealRecord]:
    """Parse CSV text, bytes, or a readable stream into deal records.

    Row order is preserved. Raises :class:`ParseError` with a row/column
    location for empty input, a missing ``label`` column, or a cell that
    does not parse as a decimal.
    """
    text = _as_text(source)
    rows = list(csv.reader(StringIO(text)))
    rows = [row for row in rows if any(cell.strip() for cell in row)]
    if not rows:
        raise ParseError("empty input: expected a header row naming the columns")
    header = [name.strip().lower() for name in rows[0]]
    unknown = [name for name in header if name and name not in RECORD_COLUMNS]
    if unknown:
        warnings.warn(
            f"ignoring unknown column(s): {', '.join(sorted(unknown))}",
            stacklevel=2,
        )
    if "label" not in header:
        raise ParseError(
            f"missing header: expected a 'label' column, got {rows[0]!r}"
        )
    positions = {name: header.index(name) for name in RECORD_COLUMNS if name in header}

    records = []
    for row_number, row in enumerate(rows[1:], start=2):
        def cell(name: str) -> str | None:
            index = positions.get(name)
            if index is None or index >= len(row):
                return None
            return row[index]

        label = (cell("label") or "").strip()
        if not label:
            raise ParseError(f"row {row_number}, column 'label': labels cannot be empty")
        records.append(
            DealRecord(
                label=label,
                cost_price=_parse_cell(cell("cost_price"), row_number, "cost_price"),
                reference_price=_parse_cell(
                    cell("reference_price"), row_number, "reference_price"
                ),
                settled_price=_parse_cell(
                    cell("settled_price"), row_number, "settled_price"
                ),
            )
        )
    return records


def parse_deal_json(source: Any) -> list[DealRecord]:
    """Parse a JSON array of record objects (or ``{"records": [...]}``)."""
    text = _as_text(source)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if isinstance(payload, dict):
        payload = payload.get("records")
    if not isinstance(payload, list):
        raise ParseError("expected a JSON array of records or an object with 'records'")
    records = []
    for index, item in enumerate(payload):
        if not isinstance(item, dict) or "label" not in item:
            raise ParseError(f"record {index}: expected an object with a 'label' field")
        fields: dict[str, Any] = {"label": str(item["label"])}
        for name in _NUMERIC_COLUMNS:
            value = item.get(name)
            if value is None:
                continue
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ParseError(f"record {index}, field {name!r}: expected a number")
            if not isfinite(value):
                raise ParseError(f"record {index}, field {name!r}: value must be finite")
            fields[name] = float(value)
        records.append(DealRecord(**fields))
    return records


def read_deal_records(path: str | Path) -> list[DealRecord]:
    """Load records from a ``.json`` or ``.csv`` file, picked by suffix."""
    path = Path(path)
    data = path.read_bytes()
    if path.suffix.lower() == ".json":
        return parse_deal_json(data)
    return parse_deal_csv(data)


def record_payload(scored: AttributedRecord) -> dict[str, Any]:
    """Wire object for one scored record (shared by file and HTTP output).

    Numeric fields carry the *resolved* frame bounds and settled value, so
    the payload is self-contained even when the rule supplied constants.
    """
    return {
        "label": scored.record.label,
        "cost_price": scored.frame.lower,
        "reference_price": scored.frame.upper,
        "settled_price": scored.evaluation.settled_value,
        "swp_raw": scored.evaluation.increasing_share,
        "swp_percent": scored.rounded_increasing,
        "bwp_raw": scored.evaluation.decreasing_share,
        "bwp_percent": scored.rounded_decreasing,
        "zone": scored.evaluation.zone.value,
        "attribution": scored.attribution.value,
    }


def summary_payload(summary: LedgerSummary) -> dict[str, Any]:
    return {
        "record_count": summary.record_count,
        "increasing_win_count": summary.increasing_win_count,
        "decreasing_win_count": summary.decreasing_win_count,
        "tie_count": summary.tie_count,
        "avg_increasing_percent": summary.avg_increasing_percent,
        "avg_decreasing_percent": summary.avg_decreasing_percent,
        "full_win_count_increasing": summary.full_win_count_increasing,
        "full_win_count_decreasing": summary.full_win_count_decreasing,
    }


def _num(value: float) -> str:
    # Shortest text that still round-trips to the same float.
    return repr(value)


def _render_csv(records: Sequence[AttributedRecord], summary: LedgerSummary) -> str:
    out = StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "label",
            "cost_price",
            "reference_price",
            "settled_price",
            "swp_raw",
            "swp_percent",
            "bwp_raw",
            "bwp_percent",
            "zone",
            "attribution",
        ]
    )
    for scored in records:
        payload = record_payload(scored)
        writer.writerow(
            [
                payload["label"],
                _num(payload["cost_price"]),
                _num(payload["reference_price"]),
                _num(payload["settled_price"]),
                _num(payload["swp_raw"]),
                payload["swp_percent"],
                _num(payload["bwp_raw"]),
                payload["bwp_percent"],
                payload["zone"],
                payload["attribution"],
            ]
        )
    writer.writerow(
        [
            SUMMARY_ROW_LABEL,
            "",
            "",
            "",
            "",
            summary.avg_increasing_percent,
            "",
            summary.avg_decreasing_percent,
            "",
            "",
        ]
    )
    return out.getvalue()


def _render_json(records: Sequence[AttributedRecord], summary: LedgerSummary) -> str:
    document = {
        "schema_version": SCHEMA_VERSION,
        "records": [record_payload(scored) for scored in records],
        "summary": summary_payload(summary),
    }
    return json.dumps(document, indent=2) + "\n"


def _compact(value: float) -> str:
    return format(value, ".12g")


def _render_text(records: Sequence[AttributedRecord], summary: LedgerSummary) -> str:
    frame = records[0].frame
    inc, dec = frame.increasing_party, frame.decreasing_party
    headers = [
        "label",
        "cost",
        "reference",
        "settled",
        inc,
        dec,
        f"{inc} wins",
        f"{dec} wins",
    ]
    body = []
    for scored in records:
        marks = {
            "increasing_wins": ("X", ""),
            "decreasing_wins": ("", "X"),
            "tie": ("X", "X"),
        }[scored.attribution.value]
        body.append(
            [
                scored.record.label,
                _compact(scored.frame.lower),
                _compact(scored.frame.upper),
                _compact(scored.evaluation.settled_value),
                f"{scored.rounded_increasing}%",
                f"{scored.rounded_decreasing}%",
                marks[0],
                marks[1],
            ]
        )
    body.append(
        [
            SUMMARY_ROW_LABEL,
            "",
            "",
            "",
            f"{summary.avg_increasing_percent}%",
            f"{summary.avg_decreasing_percent}%",
            str(summary.increasing_win_count),
            str(summary.decreasing_win_count),
        ]
    )
    widths = [
        max(len(headers[col]), *(len(row[col]) for row in body))
        for col in range(len(headers))
    ]
    lines = [
        "  ".join(name.ljust(width) for name, width in zip(headers, widths)).rstrip()
    ]
    for row in body:
        lines.append(
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        )
    return "\n".join(lines) + "\n"


def render_output(
    records: Sequence[AttributedRecord],
    summary: LedgerSummary,
    format: str = "text",
) -> str:
    """Render scored records plus their summary as ``text``, ``csv``, or
    ``json``. Text output is column-aligned with a final ``AVG`` row."""
    if not records:
        raise ValueError("nothing to render: records list is empty")
    if format == "text":
        return _render_text(records, summary)
    if format == "csv":
        return _render_csv(records, summary)
    if format == "json":
        return _render_json(records, summary)
    raise ValueError(f"unknown format {format!r}: expected text, csv, or json")
