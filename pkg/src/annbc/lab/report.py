"""Report files and the Markdown summary."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .core import TheoremReport


def report_filename(rep: TheoremReport) -> str:
    ring = re.sub(r"[^A-Za-z0-9_.-]+", "_", rep.ring).strip("_") or "ring"
    return f"{rep.theorem}__{ring}.json"


def write_reports(reports: list[TheoremReport], out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for rep in reports:
        path = out / report_filename(rep)
        path.write_text(rep.to_json(), encoding="utf-8")
        paths.append(path)
    return paths


def load_reports(directory: str | Path) -> list[TheoremReport]:
    reps = [TheoremReport.from_dict(json.loads(p.read_text(encoding="utf-8")))
            for p in sorted(Path(directory).glob("*.json"))]
    return sorted(reps, key=lambda r: (r.theorem, r.ring))


def status_word(rep: TheoremReport) -> str:
    return rep.status.split(":", 1)[0]


def markdown_summary(reports: list[TheoremReport]) -> str:
    lines = ["| theorem | ring | status | tuples | counterexamples | ms |",
             "|---|---|---|---:|---:|---:|"]
    for r in reports:
        lines.append(f"| {r.theorem} | {r.ring} | {r.status} | {r.tuples_scanned} "
                     f"| {len(r.counterexamples)} | {r.elapsed_ms} |")
    fails = [r for r in reports if status_word(r) == "fail"]
    for r in fails:
        lines.append("")
        lines.append(f"### {r.theorem} on {r.ring}")
        for c in r.counterexamples[:10]:
            assignment = ", ".join(f"{k}={v}" for k, v in c["vars"].items())
            lines.append(f"- `{c['failed_clause']}`: {assignment}")
    counts = {w: sum(status_word(r) == w for r in reports) for w in ("pass", "fail", "skipped")}
    lines.append("")
    lines.append(f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
    return "\n".join(lines) + "\n"


def table_summary(reports: list[TheoremReport]) -> str:
    """Fixed-width plain-text table."""
    rows = [("theorem", "ring", "status", "tuples", "cex")]
    rows += [(r.theorem, r.ring, r.status, str(r.tuples_scanned), str(len(r.counterexamples)))
             for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                     for row in rows) + "\n"
