"""The acceptance grid: every closed formula checked against a rank oracle.

Cells are independent and keyed by criterion and parameters. A failing cell
is rerun once on a derived seed before it is reported; experimental cells only
check that a well-formed report comes out.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from pydantic import BaseModel

from starconf.config import DEFAULT_PRIME, DEFAULT_SEED
from starconf.errors import StarconfError
from starconf.gradedideal import hf_sequence
from starconf.lefschetz import (
    check_sum_dim_lemma,
    check_union_vanishing,
    experiment_open_question,
    lefschetz_pair,
    sum_hf_identity,
    surjectivity_propagates,
    union_hf_report,
    wlp_sum,
)
from starconf.models import DimensionCheck, DimensionReport, SuiteCell, SuiteReport
from starconf.reports import hilbert_report
from starconf.resolution import alpha, betti_report
from starconf.starconfig import (
    StarConfigSpec,
    bdl_for_spec,
    build,
    generic_hf_2s_p2,
    sigma,
    sigma_formula_2s,
    verify_generators,
)

logger = logging.getLogger(__name__)

# Offset for the one rerun a failing cell gets.
RESEED_OFFSET = 1_000_003


@dataclass(frozen=True)
class CellTask:
    key: str
    criterion: str
    kind: str
    params: tuple


@dataclass
class CellOutcome:
    passed: bool
    detail: str
    report: BaseModel
    experimental: bool = False
    reseeded: bool = False


def _spec_key(n: int, r: int, degrees: tuple[int, ...]) -> str:
    return f"n{n}-r{r}-d{''.join(map(str, degrees))}"


def config_grid(grid: str) -> list[tuple[int, int, tuple[int, ...]]]:
    """(n, r, degrees) over n in {2,3}, s in 2..5, 2 <= r <= min(s,n), d_i in {1,2}.

    Degree lists are nondecreasing; the order of general forms does not matter.
    ``small`` drops the n = 3, s = 5 configurations.
    """
    cells = []
    for n in (2, 3):
        for s in range(2, 6):
            if grid == "small" and n == 3 and s > 4:
                continue
            for r in range(2, min(s, n) + 1):
                for degrees in itertools.combinations_with_replacement((1, 2), s):
                    cells.append((n, r, degrees))
    return cells


def build_tasks(grid: str) -> list[CellTask]:
    tasks: list[CellTask] = []

    def add(criterion: str, kind: str, key: str, *params) -> None:
        tasks.append(CellTask(f"{criterion}/{kind}/{key}", criterion, kind, params))

    for n, r, degrees in config_grid(grid):
        key = _spec_key(n, r, degrees)
        add("c01", "generators", key, n, r, degrees)
        add("c04", "betti", key, n, r, degrees, grid)
        add("c06", "bdl", key, n, r, degrees)
    add("c02", "quadrics-p3", "n3-r3-d222")
    for n, s in ((2, 3), (2, 4), (2, 5), (3, 4), (3, 5)):
        add("c03", "generic-linear", f"n{n}-s{s}", n, s)
    add("c05", "alpha", "s8")
    add("c07", "quadric-pair", "s4")
    add("c08", "union-hf", "s3-s2", (2, 2, 2), (2, 2), (1, 3, 6, 10, 15, 16, 16))
    add("c08", "union-hf", "s3-s3", (2, 2, 2), (2, 2, 2), (1, 3, 6, 10, 15, 21, 24, 24))
    for s in (4, 5):
        add("c09", "union-vanishing", f"s{s}-d2", s, 2)
    for s in (3, 4, 5):
        for ell in range(s):
            add("c10", "sum-dimensions", f"s{s}-l{ell}", s, ell)
    for n in (2, 3):
        for s in range(n, 6):
            for t in range(n, s + 1):
                add("c11", "wlp-linear", f"n{n}-s{s}-t{t}", n, s, t)
    for s in (3, 4):
        for g_degrees in ((2,) * s, (1,) + (2,) * (s - 1)):
            add("c11", "wlp-one-linear", f"s{s}-g{''.join(map(str, g_degrees))}", s, g_degrees)
    for s in (3, 4, 5):
        for ell in range(s):
            add("c11", "wlp-extra-linear", f"s{s}-l{ell}", s, ell)
    for x_deg, y_deg in (
        ((2, 2, 2), (1, 1, 1)),
        ((1, 2, 2), (2, 2, 2)),
        ((1, 1, 1, 1), (2, 2, 2)),
        ((1, 1, 2, 2), (2, 2, 2, 2)),
    ):
        add("c11", "wlp-distinct-sigma", f"{''.join(map(str, x_deg))}-{''.join(map(str, y_deg))}", x_deg, y_deg)
    for n, s, t, d in ((2, 4, 4, 2), (2, 3, 3, 1), (2, 4, 3, 2)):
        add("c12", "open-question", f"n{n}-s{s}-t{t}-d{d}", n, s, t, d)
    for s in (3, 4, 5):
        for degrees in itertools.combinations_with_replacement((1, 2), s):
            add("s01", "sigma-2s", ''.join(map(str, degrees)), degrees)
    for degrees in ((2, 2, 2), (1, 2, 2), (2, 2, 2, 2)):
        add("s02", "powers-betti", ''.join(map(str, degrees)), degrees)
    return sorted(tasks, key=lambda task: task.key)


# --- cell bodies ----------------------------------------------------------------


def _generators(seed: int, prime: int, n: int, r: int, degrees: tuple[int, ...]) -> CellOutcome:
    spec = StarConfigSpec(n=n, r=r, degrees=degrees, seed=seed, prime=prime)
    star = build(spec)
    report = verify_generators(star, t_max=spec.total_degree + n)
    return CellOutcome(report.passed, "", report, reseeded=star.reseeded)


def _betti(seed: int, prime: int, n: int, r: int, degrees: tuple[int, ...], grid: str) -> CellOutcome:
    spec = StarConfigSpec(n=n, r=r, degrees=degrees, seed=seed, prime=prime)
    # The small grid checks one degree past the last shift; full goes to d + n + 1.
    j_max = spec.total_degree + 1 if grid == "small" else None
    report = betti_report(spec, verify=True, j_max=j_max)
    passed = bool(report.match and report.euler_consistent and report.level and report.acm)
    detail = f"match={report.match} euler={report.euler_consistent} pd={report.projective_dimension}"
    return CellOutcome(passed, detail, report, reseeded=report.config.reseeded)


def _bdl(seed: int, prime: int, n: int, r: int, degrees: tuple[int, ...]) -> CellOutcome:
    spec = StarConfigSpec(n=n, r=r, degrees=degrees, seed=seed, prime=prime)
    report = bdl_for_spec(spec)
    return CellOutcome(report.holds and report.reproduces_star is not False, "", report)


def _quadrics_p3(seed: int, prime: int) -> CellOutcome:
    spec = StarConfigSpec.uniform(3, 3, 3, 2, seed=seed, prime=prime)
    report = hilbert_report(spec, t_max=5)
    passed = report.values == [1, 4, 7, 8, 8, 8] and report.degree == 8
    return CellOutcome(passed, f"H = {report.values}", report, reseeded=report.config.reseeded)


def _generic_linear(seed: int, prime: int, n: int, s: int) -> CellOutcome:
    spec = StarConfigSpec.uniform(n, n, s, 1, seed=seed, prime=prime)
    report = hilbert_report(spec, t_max=s)
    return CellOutcome(bool(report.matches_generic), f"H = {report.values}", report)


def _alpha(seed: int, prime: int) -> CellOutcome:
    checks = []
    for s in range(2, 9):
        for r in range(2, s + 1):
            # alpha at (r, s-1) needs r < s.
            for ell in range(2, r if r < s else 2):
                lhs = alpha(r - 1, s - 1, ell - 1) + alpha(r, s - 1, ell)
                checks.append(_check(f"alpha recurrence r={r} s={s} step={ell}", ell, alpha(r, s, ell), lhs))
            checks.append(_check(f"top alpha r={r} s={s}", r, comb(s - 1, r - 1), alpha(r, s, r)))
    report = DimensionReport(checks=checks, passed=all(c.equal for c in checks))
    return CellOutcome(report.passed, f"{len(checks)} identities", report)


def _check(label: str, degree: int, expected: int, actual: int) -> DimensionCheck:
    return DimensionCheck(label=label, degree=degree, expected=expected, actual=actual, equal=expected == actual)


def _quadric_pair(seed: int, prime: int) -> CellOutcome:
    x = build(StarConfigSpec.uniform(2, 2, 4, 2, seed=seed, prime=prime, stream=0))
    y = build(StarConfigSpec.uniform(2, 2, 4, 2, seed=seed, prime=prime, stream=1))
    report = union_hf_report(x, y, 10)
    at6 = sum_hf_identity(x, y, 6)
    x_hf = hf_sequence(x.ideal, 7)
    passed = (
        list(x_hf.values) == [1, 3, 6, 10, 15, 21, 24, 24]
        and report.union == [1, 3, 6, 10, 15, 21, 28, 36, 45, 48, 48]
        and at6.equal
        and at6.lhs == 20
        and sigma(x_hf) == 7
        and sigma(hf_sequence(y.ideal, 7)) == 7
    )
    return CellOutcome(passed, f"H(A,6) = {at6.lhs}", report, reseeded=x.reseeded or y.reseeded)


def _union_hf(
    seed: int, prime: int, x_deg: tuple[int, ...], y_deg: tuple[int, ...], expected: tuple[int, ...]
) -> CellOutcome:
    x = build(StarConfigSpec(n=2, r=2, degrees=x_deg, seed=seed, prime=prime, stream=0))
    y = build(StarConfigSpec(n=2, r=2, degrees=y_deg, seed=seed, prime=prime, stream=1))
    report = union_hf_report(x, y, len(expected) - 1)
    passed = report.union == list(expected) and all(r.equal for r in report.identity)
    return CellOutcome(passed, f"union = {report.union}", report, reseeded=x.reseeded or y.reseeded)


def _union_vanishing(seed: int, prime: int, s: int, d: int) -> CellOutcome:
    x = build(StarConfigSpec.uniform(2, 2, s, d, seed=seed, prime=prime, stream=0))
    y = build(StarConfigSpec.uniform(2, 2, s, d, seed=seed, prime=prime, stream=1))
    report = union_hf_report(x, y, d * s)
    return CellOutcome(check_union_vanishing(x, y, d), f"H_(X u Y)({d * s}) = {report.union[-1]}", report)


def _sum_dimensions(seed: int, prime: int, s: int, ell: int) -> CellOutcome:
    pattern = (1,) * ell + (2,) * (s - ell)
    x = build(StarConfigSpec(n=2, r=2, degrees=pattern, seed=seed, prime=prime, stream=0))
    y = build(StarConfigSpec(n=2, r=2, degrees=pattern, seed=seed, prime=prime, stream=1))
    report = check_sum_dim_lemma(x, y, ell)
    detail = " ".join(f"{c.actual}/{c.expected}" for c in report.checks)
    return CellOutcome(report.passed, detail, report)


def _wlp_linear(seed: int, prime: int, n: int, s: int, t: int) -> CellOutcome:
    x = build(StarConfigSpec.uniform(n, n, s, 1, seed=seed, prime=prime, stream=0))
    y = build(StarConfigSpec.uniform(n, n, t, 1, seed=seed, prime=prime, stream=1))
    report = wlp_sum(x, y, seed=seed)
    return CellOutcome(report.verdict, f"socle {report.socle_degree}", report)


def _wlp_one_linear(seed: int, prime: int, s: int, g_degrees: tuple[int, ...]) -> CellOutcome:
    x = build(StarConfigSpec.uniform(2, 2, s, 1, seed=seed, prime=prime, stream=0))
    y = build(StarConfigSpec(n=2, r=2, degrees=g_degrees, seed=seed, prime=prime, stream=1))
    report = wlp_sum(x, y, seed=seed)
    return CellOutcome(report.verdict, f"criterion {report.criterion_holds}", report)


def _wlp_extra_linear(seed: int, prime: int, s: int, ell: int) -> CellOutcome:
    x, y, form = lefschetz_pair(s, ell, seed=seed, prime=prime)
    report = wlp_sum(x, y, seed=seed, prescribed=form)
    check = report.element_check
    passed = bool(check and check.verdict and surjectivity_propagates(check))
    return CellOutcome(passed, f"element verdict {check.verdict if check else None}", report)


def _wlp_distinct_sigma(seed: int, prime: int, x_deg: tuple[int, ...], y_deg: tuple[int, ...]) -> CellOutcome:
    x = build(StarConfigSpec(n=2, r=2, degrees=x_deg, seed=seed, prime=prime, stream=0))
    y = build(StarConfigSpec(n=2, r=2, degrees=y_deg, seed=seed, prime=prime, stream=1))
    report = wlp_sum(x, y, seed=seed)
    return CellOutcome(report.verdict, report.note, report)


def _open_question(seed: int, prime: int, n: int, s: int, t: int, d: int) -> CellOutcome:
    report = experiment_open_question(n, s, t, d, seed=seed, prime=prime)
    well_formed = report.status == "experimental" and bool(report.degrees) and len(report.configs) == 2
    return CellOutcome(well_formed, f"verdict {report.verdict} (recorded, not asserted)", report, experimental=True)


def _sigma_2s(seed: int, prime: int, degrees: tuple[int, ...]) -> CellOutcome:
    spec = StarConfigSpec(n=2, r=2, degrees=degrees, seed=seed, prime=prime)
    star = build(spec)
    t_max = spec.total_degree + 1
    hf = hf_sequence(star.ideal, t_max)
    expected = [generic_hf_2s_p2(degrees, i) for i in range(t_max + 1)]
    passed = sigma(hf) == sigma_formula_2s(degrees) and list(hf.values) == expected
    report = hilbert_report(star.spec, t_max)
    return CellOutcome(passed, f"sigma {report.sigma}", report, reseeded=star.reseeded)


def _powers_betti(seed: int, prime: int, degrees: tuple[int, ...]) -> CellOutcome:
    spec = StarConfigSpec(n=2, r=2, degrees=degrees, seed=seed, prime=prime, kind="powers")
    report = betti_report(spec, verify=True)
    return CellOutcome(bool(report.match), f"match={report.match}", report, reseeded=report.config.reseeded)


CELL_KINDS: dict[str, Callable[..., CellOutcome]] = {
    "generators": _generators,
    "betti": _betti,
    "bdl": _bdl,
    "quadrics-p3": _quadrics_p3,
    "generic-linear": _generic_linear,
    "alpha": _alpha,
    "quadric-pair": _quadric_pair,
    "union-hf": _union_hf,
    "union-vanishing": _union_vanishing,
    "sum-dimensions": _sum_dimensions,
    "wlp-linear": _wlp_linear,
    "wlp-one-linear": _wlp_one_linear,
    "wlp-extra-linear": _wlp_extra_linear,
    "wlp-distinct-sigma": _wlp_distinct_sigma,
    "open-question": _open_question,
    "sigma-2s": _sigma_2s,
    "powers-betti": _powers_betti,
}


def _attempt(task: CellTask, seed: int, prime: int) -> CellOutcome:
    try:
        return CELL_KINDS[task.kind](seed, prime, *task.params)
    except StarconfError as exc:
        logger.warning("Cell %s raised %s", task.key, exc)
        report = DimensionReport(checks=[], passed=False)
        return CellOutcome(False, f"{type(exc).__name__}: {exc}", report)


def run_cell(task: CellTask, seed: int = DEFAULT_SEED, prime: int = DEFAULT_PRIME) -> tuple[SuiteCell, BaseModel]:
    """Run one cell, rerunning a failure once on ``seed + RESEED_OFFSET``."""
    outcome = _attempt(task, seed, prime)
    if not outcome.passed and not outcome.experimental:
        logger.info("Cell %s failed, rerunning on a derived seed", task.key)
        outcome = _attempt(task, seed + RESEED_OFFSET, prime)
        outcome.reseeded = True
    cell = SuiteCell(
        key=task.key,
        criterion=task.criterion,
        passed=outcome.passed,
        reseeded=outcome.reseeded,
        experimental=outcome.experimental,
        detail=outcome.detail,
    )
    return cell, outcome.report


def _run_serial(tasks: list[CellTask], seed: int, prime: int) -> Iterator[tuple[SuiteCell, BaseModel]]:
    for task in tasks:
        yield run_cell(task, seed, prime)


def run_suite(
    grid: str = "small",
    seed: int = DEFAULT_SEED,
    prime: int = DEFAULT_PRIME,
    workers: int = 1,
    only: str | None = None,
    on_cell: Callable[[SuiteCell], None] | None = None,
) -> tuple[SuiteReport, dict[str, BaseModel]]:
    """Run the grid; results are ordered by cell key whatever the completion order.

    ``only`` keeps the cells whose key starts with the given prefix.
    """
    tasks = build_tasks(grid)
    if only:
        tasks = [t for t in tasks if t.key.startswith(only)]
    results: dict[str, tuple[SuiteCell, BaseModel]] = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = pool.map(run_cell, tasks, [seed] * len(tasks), [prime] * len(tasks))
            for cell, report in outcomes:
                results[cell.key] = (cell, report)
                if on_cell:
                    on_cell(cell)
    else:
        for cell, report in _run_serial(tasks, seed, prime):
            results[cell.key] = (cell, report)
            if on_cell:
                on_cell(cell)
    cells = [results[key][0] for key in sorted(results)]
    summary = SuiteReport(
        grid=grid, seed=seed, prime=prime, cells=cells, passed=all(c.passed for c in cells)
    )
    return summary, {key: results[key][1] for key in sorted(results)}


def count_tasks(grid: str, only: str | None = None) -> int:
    return sum(1 for t in build_tasks(grid) if not only or t.key.startswith(only))
