"""Single-configuration commands: hilbert, degree, betti, verify-intersection, bdl."""

from __future__ import annotations

from starconf.cli_utils import emit, fail, finish, resolve_spec, setup_verbosity
from starconf.config import Config, load_config
from starconf.errors import StarconfError
from starconf.models import DegreeReport


def load_run_config(seed: int | None, prime: int | None, verbose: bool) -> Config:
    try:
        cfg = load_config().with_overrides(seed=seed, prime=prime, verbose=verbose)
    except ValueError as e:
        fail(f"invalid configuration: {e}")
    setup_verbosity(cfg.verbose)
    return cfg


def handle_hilbert(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose) -> None:
    """Hilbert function by rank; fails if a closed-form prediction disagrees."""
    from starconf.reports import hilbert_report

    cfg = load_run_config(seed, prime, verbose)
    try:
        spec = resolve_spec(cfg, n, r, s, degrees, kind, spec_file)
        report = hilbert_report(spec, t_max)
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    finish(report.matches_generic is not False and report.predicted_from_betti == report.values)


def handle_degree(n, r, s, degrees, kind, spec_file, seed, prime, fmt, output, verbose) -> None:
    from starconf.starconfig import degree_points

    cfg = load_run_config(seed, prime, verbose)
    try:
        spec = resolve_spec(cfg, n, r, s, degrees, kind, spec_file)
        report = DegreeReport(config=spec.summary(), degree=degree_points(spec))
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    finish(True)


def handle_betti(n, r, s, degrees, kind, spec_file, verify, j_max, seed, prime, fmt, output, verbose) -> None:
    """Predicted Betti table; ``verify`` adds the Koszul oracle and its checks."""
    from starconf.resolution import betti_report

    cfg = load_run_config(seed, prime, verbose)
    try:
        spec = resolve_spec(cfg, n, r, s, degrees, kind, spec_file)
        report = betti_report(spec, verify=verify, j_max=j_max)
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    if not verify:
        finish(report.level)
    finish(bool(report.match and report.euler_consistent and report.acm and report.level))


def handle_verify_intersection(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose) -> None:
    from starconf.starconfig import build, verify_generators

    cfg = load_run_config(seed, prime, verbose)
    try:
        spec = resolve_spec(cfg, n, r, s, degrees, kind, spec_file)
        report = verify_generators(build(spec), t_max)
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    finish(report.passed)


def handle_bdl(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose) -> None:
    """Link the (r,s) ideal from its (r-1,s-1) and (r,s-1) pieces and check the identity."""
    from starconf.starconfig import bdl_for_spec

    cfg = load_run_config(seed, prime, verbose)
    try:
        spec = resolve_spec(cfg, n, r, s, degrees, kind, spec_file)
        report = bdl_for_spec(spec, t_max)
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    finish(report.holds and report.reproduces_star is not False)
