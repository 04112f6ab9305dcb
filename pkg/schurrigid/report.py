# -*- coding: utf-8 -*-
"""Plain-text tables and JSON documents for the command-line verbs."""
from __future__ import annotations

import json
from typing import Iterable, List, Sequence, Tuple

from schurrigid import JSON_INDENT
from schurrigid.rigidity import Verdict, VerifyReport, VerifyRow
from schurrigid.types import JSON

VERIFY_COLUMNS = (
    "pair",
    "kind",
    "counts",
    "criterion",
    "escape",
    "status",
    "source",
    "ok",
)


def to_json(data: JSON) -> str:
    return json.dumps(data, sort_keys=True, indent=JSON_INDENT) + "\n"


def table(headers: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """Left-aligned columns separated by two spaces."""
    cells: List[Tuple[str, ...]] = [tuple(headers)]
    cells.extend(tuple(str(c) for c in row) for row in rows)
    widths = [max(len(row[n]) for row in cells) for n in range(len(headers))]
    lines = []
    for row in cells:
        line = "  ".join(c.ljust(w) for c, w in zip(row, widths))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def format_counts(counts: Sequence[Tuple[int, int]]) -> str:
    if not counts:
        return "-"
    return ",".join(f"a{g}:{c}" for g, c in counts)


def verify_cells(row: VerifyRow) -> Tuple[str, ...]:
    return (
        row.pair,
        row.kind,
        format_counts(row.counts),
        "pass" if row.criterion else "fail",
        "holds" if row.escape else "violated",
        row.status or "-",
        row.source or "-",
        "ok" if row.ok else "FAIL",
    )


def verify_table(reports: Sequence[VerifyReport]) -> str:
    rows = [verify_cells(r) for report in reports for r in report.rows]
    text = table(VERIFY_COLUMNS, rows)
    failures = sum(len(report.failures) for report in reports)
    for report in reports:
        for row in report.failures:
            text += f"FAIL {row.pair}: {row.note}\n"
    text += (
        f"{len(rows)} pairs on {len(reports)} diagrams, "
        f"{failures} failures\n"
    )
    return text


def verify_json(reports: Sequence[VerifyReport]) -> JSON:
    return {
        "reports": [r.to_json() for r in reports],
        "failures": sum(len(r.failures) for r in reports),
    }


def verdict_text(verdict: Verdict) -> str:
    lines = [f"{verdict.pair}: {verdict.status}"]
    for reason in verdict.reasons:
        lines.append(
            f"  {reason.criterion}: {reason.result} [{reason.source}]"
        )
    flags = ", ".join(
        f"{name}={'-' if value is None else value}"
        for name, value in verdict.flags
    )
    lines.append(f"  flags: {flags}")
    return "\n".join(lines) + "\n"


def verdicts_table(verdicts: Sequence[Verdict]) -> str:
    return table(
        ("pair", "status", "linear", "maximal", "reason"),
        (
            (
                v.pair,
                v.status,
                _yes_no(bool(v.flag("linear"))),
                _yes_no(bool(v.flag("maximal_linear"))),
                v.reasons[-1].source if v.reasons else "-",
            )
            for v in verdicts
        ),
    )
