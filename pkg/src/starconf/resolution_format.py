"""Text and CSV layouts for Betti tables."""

from __future__ import annotations

import csv
import io

from starconf.models import BettiEntry, BettiReport


def betti_csv(entries: list[BettiEntry]) -> str:
    """Rows ``step,shift,multiplicity`` sorted by step then shift."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["step", "shift", "multiplicity"])
    for e in sorted(entries, key=lambda e: (e.step, e.shift)):
        writer.writerow([e.step, e.shift, e.multiplicity])
    return buffer.getvalue()


def betti_diagram(entries: list[BettiEntry]) -> str:
    """Steps as columns, shifts as rows; ``.`` marks an empty slot."""
    if not entries:
        return "(empty table)\n"
    steps = sorted({e.step for e in entries})
    shifts = sorted({e.shift for e in entries})
    table = {(e.step, e.shift): e.multiplicity for e in entries}
    width = max(len(str(v)) for v in [*table.values(), *steps]) + 1
    label = max(len("shift"), *(len(str(j)) for j in shifts))
    lines = [f"{'shift':>{label}} |" + "".join(f"{step:>{width}}" for step in steps)]
    lines.append("-" * len(lines[0]))
    for j in shifts:
        cells = "".join(f"{table.get((step, j), '.'):>{width}}" for step in steps)
        lines.append(f"{j:>{label}} |{cells}")
    return "\n".join(lines) + "\n"


def format_betti_text(report: BettiReport) -> str:
    cfg = report.config
    lines = [
        f"Betti table of X({cfg.r},{cfg.s}) in P^{cfg.n}, degrees {','.join(map(str, cfg.degrees))}",
        f"({report.convention})",
        "",
        "Predicted:",
        betti_diagram(report.predicted).rstrip("\n"),
    ]
    if report.oracle is not None:
        lines += ["", "Koszul homology:", betti_diagram(report.oracle).rstrip("\n"), ""]
        lines.append(f"match: {report.match}")
        lines.append(f"projective dimension: {report.projective_dimension} (aCM: {report.acm})")
        lines.append(f"Euler consistency: {report.euler_consistent}")
    lines.append(f"level: {report.level}")
    return "\n".join(lines) + "\n"
