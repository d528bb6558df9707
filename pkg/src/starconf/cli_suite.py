"""Suite command: run the acceptance grid and summarize it."""

from __future__ import annotations

from pathlib import Path

import click

from starconf.cli_utils import emit, fail, finish, setup_verbosity
from starconf.config import GRIDS, load_config


def handle_suite(
    grid: str | None,
    workers: int | None,
    only: str | None,
    seed: int | None,
    prime: int | None,
    fmt: str,
    output: str | None,
    verbose: bool,
) -> None:
    """Run every cell of the grid; ``output`` names a directory for per-cell JSON."""
    from starconf.output import write_suite_dir
    from starconf.progress import SuiteProgress
    from starconf.suite import count_tasks, run_suite

    try:
        cfg = load_config().with_overrides(
            seed=seed, prime=prime, verbose=verbose, workers=workers, grid=grid
        )
    except ValueError as e:
        fail(f"invalid configuration: {e}")
    if cfg.grid not in GRIDS:
        fail(f"unknown grid {cfg.grid!r}; expected one of {', '.join(GRIDS)}")
    setup_verbosity(cfg.verbose)

    total = count_tasks(cfg.grid, only)
    if total == 0:
        click.secho(f"No cells match {only!r}.", fg='yellow', err=True)
        finish(False)

    with SuiteProgress(total) as progress:
        report, cell_reports = run_suite(
            grid=cfg.grid,
            seed=cfg.seed,
            prime=cfg.prime,
            workers=cfg.workers,
            only=only,
            on_cell=lambda cell: progress.advance(cell.key, cell.passed),
        )

    if output:
        index = write_suite_dir(report, cell_reports, Path(output))
        click.secho(f"✓ {len(cell_reports)} cell reports written to {index.parent}", fg='green', err=True)
    emit(report, fmt, None)
    if progress.failed:
        click.secho(f"{progress.failed} of {total} cells failed", fg='red', err=True)
    finish(report.passed)
