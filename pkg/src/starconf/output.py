"""Rendering and writing of reports in text, JSON and CSV."""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

from pydantic import BaseModel

from starconf.models import (
    BdlReport,
    BettiReport,
    ConfigSummary,
    DegreeReport,
    DimensionReport,
    HilbertReport,
    IntersectionReport,
    SuiteReport,
    UnionHfReport,
    WlpReport,
)
from starconf.resolution_format import betti_csv, format_betti_text

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")


def ampersand_row(values: Iterable[int]) -> str:
    """``1 & 3 & 6 & ...``."""
    return " & ".join(str(v) for v in values)


def to_json(report: BaseModel) -> str:
    """Deterministic JSON: aliases, sorted keys, trailing newline."""
    data = report.model_dump(mode="json", by_alias=True)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _config_line(cfg: ConfigSummary) -> str:
    degs = ",".join(str(d) for d in cfg.degrees)
    flag = " (reseeded)" if cfg.reseeded else ""
    return (
        f"X({cfg.r},{cfg.s}) in P^{cfg.n}, degrees {degs}, {cfg.kind} forms, "
        f"seed {cfg.seed}, p = {cfg.prime}{flag}"
    )


def _hilbert_text(report: HilbertReport) -> str:
    lines = [_config_line(report.config), f"H: {ampersand_row(report.values)}"]
    lines.append(f"sigma: {report.sigma if report.sigma is not None else 'undetermined'}")
    if report.degree is not None:
        lines.append(f"degree: {report.degree}")
    if report.generic is not None:
        lines.append(f"generic: {ampersand_row(report.generic)} (match: {report.matches_generic})")
    return "\n".join(lines) + "\n"


def _degree_text(report: DegreeReport) -> str:
    return f"{_config_line(report.config)}\ndegree: {report.degree}\n"


def _intersection_text(report: IntersectionReport) -> str:
    lines = [_config_line(report.config), "t  generated  intersection  equal"]
    for c in report.checks:
        lines.append(f"{c.t:<2} {c.dim_generated:>9}  {c.dim_oracle:>12}  {c.equal}")
    lines.append(f"passed: {report.passed}")
    return "\n".join(lines) + "\n"


def _bdl_text(report: BdlReport) -> str:
    lines = [_config_line(report.config)] if report.config else []
    lines.append(f"H(R/I'): {ampersand_row(r.lhs for r in report.records)}")
    lines.append(f"formula: {ampersand_row(r.rhs for r in report.records)}")
    lines.append(f"identity holds: {report.holds}")
    if report.reproduces_star is not None:
        lines.append(f"reproduces the star ideal: {report.reproduces_star}")
    return "\n".join(lines) + "\n"


def _wlp_text(report: WlpReport, indent: str = "") -> str:
    lines = [f"{indent}{report.ideal_summary}", f"{indent}element: {report.element}"]
    lines.append(f"{indent}H(A): {ampersand_row(report.hilbert)}")
    lines.append(f"{indent}t  dimA_t  dimA_t1  rank  maximal")
    for d in report.degrees:
        lines.append(f"{indent}{d.t:<2} {d.dim_a_t:>6}  {d.dim_a_t1:>7}  {d.rank:>4}  {d.maximal}")
    lines.append(f"{indent}WLP: {report.verdict} [{report.status}] {report.note}".rstrip())
    if report.criterion_holds is not None:
        lines.append(f"{indent}sigma criterion: {report.criterion_holds}")
    if report.element_check is not None:
        lines.append(f"{indent}with prescribed element:")
        lines.append(_wlp_text(report.element_check, indent + "  ").rstrip("\n"))
    return "\n".join(lines) + "\n"


def _union_text(report: UnionHfReport) -> str:
    lines = [_config_line(c) for c in report.configs]
    lines += [
        f"H_X:       {ampersand_row(report.x)}",
        f"H_Y:       {ampersand_row(report.y)}",
        f"H_(X u Y): {ampersand_row(report.union)}",
        f"H(A):      {ampersand_row(r.lhs for r in report.identity)}",
        f"identity holds: {all(r.equal for r in report.identity)}",
    ]
    return "\n".join(lines) + "\n"


def _dimension_text(report: DimensionReport) -> str:
    lines = [f"{c.label} in degree {c.degree}: {c.actual} (expected {c.expected})" for c in report.checks]
    lines.append(f"passed: {report.passed}")
    return "\n".join(lines) + "\n"


def _suite_text(report: SuiteReport) -> str:
    lines = [f"suite ({report.grid} grid, seed {report.seed}, p = {report.prime})"]
    for cell in report.cells:
        mark = "PASS" if cell.passed else "FAIL"
        extra = " reseeded" if cell.reseeded else ""
        extra += " experimental" if cell.experimental else ""
        lines.append(f"{mark} {cell.key}{extra} {cell.detail}".rstrip())
    failed = sum(not c.passed for c in report.cells)
    lines.append(f"{len(report.cells)} cells, {failed} failed")
    return "\n".join(lines) + "\n"


def _csv_rows(report: BaseModel) -> str:
    if isinstance(report, HilbertReport):
        return _csv(["t", "value"], enumerate(report.values))
    if isinstance(report, DegreeReport):
        return _csv(["degree"], [[report.degree]])
    if isinstance(report, BettiReport):
        return betti_csv(report.predicted if report.oracle is None else report.oracle)
    if isinstance(report, IntersectionReport):
        return _csv(["t", "dim_generated", "dim_oracle", "equal"],
                    ((c.t, c.dim_generated, c.dim_oracle, c.equal) for c in report.checks))
    if isinstance(report, BdlReport):
        return _csv(["t", "lhs", "rhs", "equal"], ((r.t, r.lhs, r.rhs, r.equal) for r in report.records))
    if isinstance(report, WlpReport):
        return _csv(["t", "dimA_t", "dimA_t1", "rank", "maximal"],
                    ((d.t, d.dim_a_t, d.dim_a_t1, d.rank, d.maximal) for d in report.degrees))
    if isinstance(report, UnionHfReport):
        return _csv(["t", "x", "y", "union"],
                    ((t, x, y, u) for t, (x, y, u) in enumerate(zip(report.x, report.y, report.union))))
    if isinstance(report, DimensionReport):
        return _csv(["label", "degree", "expected", "actual", "equal"],
                    ((c.label, c.degree, c.expected, c.actual, c.equal) for c in report.checks))
    if isinstance(report, SuiteReport):
        return _csv(["key", "criterion", "passed", "reseeded", "experimental"],
                    ((c.key, c.criterion, c.passed, c.reseeded, c.experimental) for c in report.cells))
    raise TypeError(f"no CSV layout for {type(report).__name__}")


_TEXT = {
    HilbertReport: _hilbert_text,
    DegreeReport: _degree_text,
    BettiReport: format_betti_text,
    IntersectionReport: _intersection_text,
    BdlReport: _bdl_text,
    WlpReport: _wlp_text,
    UnionHfReport: _union_text,
    DimensionReport: _dimension_text,
    SuiteReport: _suite_text,
}


def render(report: BaseModel, fmt: str = "text") -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return _csv_rows(report)
    if fmt == "text":
        return _TEXT[type(report)](report)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def write_atomic(path: str | Path, content: str) -> Path:
    """Write via a temp file and rename, so readers never see a partial file."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    temp = target.with_name(target.name + ".tmp")
    temp.write_text(content, encoding="utf-8")
    temp.replace(target)
    logger.info("Wrote %s", target)
    return target


def write_suite_dir(report: SuiteReport, cell_reports: dict[str, BaseModel], out_dir: str | Path) -> Path:
    """One JSON per cell plus ``index.json`` with the suite summary."""
    base = Path(out_dir)
    base.mkdir(parents=True, exist_ok=True)
    for key, cell_report in sorted(cell_reports.items()):
        write_atomic(base / f"{_safe_name(key)}.json", to_json(cell_report))
    return write_atomic(base / "index.json", to_json(report))


def _safe_name(key: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in key)
