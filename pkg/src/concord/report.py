"""JSON and TSV rendering of analysis results."""

from __future__ import annotations

import json


def fmt_float(x: float) -> str:
    return f"{x:.6f}"


def seq_text(seq) -> str:
    return " ".join(seq)


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def to_tsv(rows) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def concordance_payload(report, dropped: int = 0) -> dict:
    payload = report.to_dict()
    payload["normalized"] = round(report.normalized, 6)
    payload["symbols"] = list(report.symbols)
    payload["dropped_duplicates"] = dropped
    return payload


def concordance_rows(payload: dict):
    rows = [("field", "value")]
    for key in ("kappa", "normalized", "llcs", "n", "N", "dropped_duplicates"):
        val = payload[key]
        rows.append((key, fmt_float(val) if isinstance(val, float) else val))
    if "oracle_kappa" in payload:
        rows.append(("oracle_kappa", payload["oracle_kappa"]))
        rows.append(("oracle_verdict", payload["oracle_verdict"]))
    rows.append(())
    rows.append(("symbol", "per_symbol"))
    rows.extend(zip(payload["symbols"], payload["per_symbol"]))
    return rows


def matrix_rows(labels, matrix):
    rows = [("",) + tuple(labels)]
    for lab, row in zip(labels, matrix):
        rows.append((lab,) + tuple(fmt_float(v) for v in row))
    return rows
