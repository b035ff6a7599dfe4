"""JSON-lines and CSV emitters for flat result rows."""

from __future__ import annotations

import csv
import json
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO

from .validator import ValidationRecord

# fixed column order shared by the jsonl and csv sweep outputs
RECORD_FIELDS = (
    "criterion",
    "verdict",
    "D",
    "n",
    "p",
    "x",
    "y_max",
    "h",
    "exponent",
    "hypotheses_hold",
    "claim_holds_empirically",
    "failed_hypotheses",
)


def dumps(obj: Any) -> str:
    # Python ints serialize as exact decimal digits, never exponent notation
    return json.dumps(obj, separators=(",", ":"))


def parse_jsonl(text: str) -> List[Dict[str, Any]]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def record_row(rec: ValidationRecord) -> Dict[str, Any]:
    rep = rec.detail
    ev = rep.evidence
    inp = rec.inputs
    return {
        "criterion": rec.criterion_id.value,
        "verdict": rec.verdict.value,
        "D": rec.D,
        "n": inp.get("n", inp.get("n_max")),
        "p": inp.get("p"),
        "x": inp.get("x"),
        "y_max": inp.get("y_max"),
        "h": ev.get("h"),
        "exponent": ev.get("exponent"),
        "hypotheses_hold": rep.hypotheses_hold,
        "claim_holds_empirically": rep.claim_holds_empirically,
        "failed_hypotheses": ";".join(k for k, v in rep.hypothesis_detail if not v),
    }


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def write_rows(
    rows: Iterable[Dict[str, Any]],
    out: TextIO,
    fmt: str = "jsonl",
    fields: Optional[Sequence[str]] = None,
) -> None:
    rows = list(rows)
    if fmt == "jsonl":
        for row in rows:
            out.write(dumps(row) + "\n")
    elif fmt == "csv":
        if fields is None:
            fields = list(rows[0]) if rows else []
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_csv_cell(row.get(k)) for k in fields])
    else:
        raise ValueError(f"unknown format {fmt!r}")
