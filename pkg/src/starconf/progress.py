"""Rich progress bar for the acceptance suite."""

from __future__ import annotations

import sys

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
    TimeRemainingColumn,
)


class SuiteProgress:
    """One bar over all grid cells, drawn on stderr only when it is a TTY.

    Failures are printed above the bar as they arrive.
    """

    def __init__(self, total_cells: int) -> None:
        self.enabled = sys.stderr.isatty()
        self.total_cells = total_cells
        self.failed = 0
        if not self.enabled:
            return

        self.console = Console(stderr=True)
        self.progress = Progress(
            SpinnerColumn(),
            TextColumn("{task.description:<36}"),
            BarColumn(bar_width=24),
            MofNCompleteColumn(),
            TextColumn("[red]{task.fields[failed]} failed"),
            TimeElapsedColumn(),
            TimeRemainingColumn(),
            console=self.console,
        )
        self.task = self.progress.add_task("cells", total=max(total_cells, 1), failed=0)

    def advance(self, key: str, passed: bool) -> None:
        """Mark one cell as complete."""
        if not passed:
            self.failed += 1
            self.log(f"FAIL {key}")
        if not self.enabled:
            return
        short = key if len(key) <= 34 else key[:31] + "..."
        self.progress.update(self.task, description=short, failed=self.failed)
        self.progress.advance(self.task)

    def log(self, message: str) -> None:
        """Print a message above the progress bar."""
        if self.enabled:
            self.progress.print(message)
        else:
            import click
            click.echo(message, err=True)

    def __enter__(self) -> SuiteProgress:
        if self.enabled:
            self.progress.start()
        return self

    def __exit__(self, *args: object) -> None:
        if self.enabled:
            self.progress.stop()
