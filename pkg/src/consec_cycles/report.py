"""Report serialization: canonical JSON, a CSV mirror, and atomic writes.

The JSON layout is the stable contract:
``{"summary": {total, hypotheses_met, holds, excepted, violations,
errors}, "entries": [{index, graph6, theorem, k, verdict,
witness_lengths, trace?, error?}]}``.  Serialization is deterministic
(sorted keys, fixed separators) so identical scans produce byte-identical
reports regardless of worker count.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile

from .theorems import ScanReport

CSV_COLUMNS = ("index", "graph6", "theorem", "k", "verdict", "witness_lengths", "error")


def report_to_json(report: ScanReport) -> str:
    return json.dumps(report.to_obj(), indent=2, sort_keys=True) + "\n"


def report_to_csv(report: ScanReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for e in report.entries:
        writer.writerow([
            e.index,
            e.graph6,
            e.theorem,
            "" if e.k is None else e.k,
            e.verdict,
            "" if e.witness_lengths is None else ";".join(map(str, e.witness_lengths)),
            e.error or "",
        ])
    return buf.getvalue()


def report_to_text(report: ScanReport) -> str:
    """Human-oriented rendering; not schema-stable."""
    lines = []
    s = report.summary
    lines.append(
        f"checked {s['total']} cases: {s['holds']} hold, "
        f"{s['violations']} violations, {s['excepted']} excepted, "
        f"{s['errors']} errors, "
        f"{s['total'] - s['hypotheses_met'] - s['excepted'] - s['errors']} out of scope")
    for e in report.entries:
        tail = ""
        if e.witness_lengths:
            tail = f"  lengths={e.witness_lengths}"
        if e.error:
            tail = f"  {e.error}"
        lines.append(f"[{e.index}] {e.graph6}  {e.theorem} k={e.k}: {e.verdict}{tail}")
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a temp file and rename, so readers never see partial output."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
