"""Shared CLI helpers: option sets, spec resolution, report emission."""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable

import click
from pydantic import BaseModel

from starconf.config import Config
from starconf.errors import ParameterError
from starconf.output import FORMATS, render, write_atomic
from starconf.starconfig import KINDS, StarConfigSpec, load_spec_file


def parse_degrees(text: str | None) -> tuple[int, ...] | None:
    """Parse '2,2,1' -> (2, 2, 1)."""
    if text is None or not text.strip():
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"degrees must be comma-separated integers, got {text!r}") from exc


def spec_options(func: Callable) -> Callable:
    """Options describing one configuration X."""
    options = [
        click.option('--n', 'n', type=int, default=None, help="Ambient dimension of P^n (default: r)"),
        click.option('--r', 'r', type=int, default=None, help='Codimension parameter r'),
        click.option('--s', 's', type=int, default=None, help='Number of forms (all linear unless --degrees)'),
        click.option('--degrees', type=str, default=None, help='Comma-separated form degrees, e.g. 2,2,2'),
        click.option('--kind', type=click.Choice(KINDS), default='general', help='How forms are sampled'),
        click.option('--spec-file', type=click.Path(exists=True, dir_okay=False), default=None,
                     help='YAML or JSON spec file (overrides the inline parameters)'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run_options(func: Callable) -> Callable:
    """Seed, prime, output and verbosity, shared by every computing command."""
    options = [
        click.option('--seed', type=int, default=None, help='RNG seed (env STARCONF_SEED)'),
        click.option('--prime', type=int, default=None, help='Field modulus (env STARCONF_PRIME)'),
        click.option('--format', 'fmt', type=click.Choice(FORMATS), default='text', help='Output format'),
        click.option('--output', '-o', type=click.Path(dir_okay=False), default=None, help='Write report to file'),
        click.option('--verbose', '-v', is_flag=True, help='Verbose output'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def resolve_spec(
    cfg: Config,
    n: int | None,
    r: int | None,
    s: int | None,
    degrees: str | None,
    kind: str = "general",
    spec_file: str | None = None,
    stream: int = 0,
) -> StarConfigSpec:
    """Build a spec from a spec file or inline flags."""
    if spec_file:
        return load_spec_file(spec_file, seed=cfg.seed, prime=cfg.prime, stream=stream)
    parsed = parse_degrees(degrees)
    if parsed is None:
        if s is None:
            raise ParameterError("give --degrees or --s")
        parsed = (1,) * s
    elif s is not None and s != len(parsed):
        raise ParameterError(f"--s {s} does not match {len(parsed)} degrees")
    if r is None:
        raise ParameterError("--r is required without --spec-file")
    if n is None:
        n = r
    return StarConfigSpec(n=n, r=r, degrees=parsed, seed=cfg.seed, prime=cfg.prime, kind=kind, stream=stream)


def setup_verbosity(verbose: bool) -> None:
    if verbose:
        logging.getLogger("starconf").setLevel(logging.INFO)


def emit(report: BaseModel, fmt: str, output: str | None) -> None:
    """Render the report to stdout, or atomically to ``output``."""
    text = render(report, fmt)
    if output:
        path = write_atomic(output, text)
        click.secho(f"✓ Report written to {path}", fg='green', err=True)
    else:
        click.echo(text, nl=False)


def fail(message: str, code: int = 2) -> None:
    click.secho(f"Error: {message}", fg='red', err=True)
    sys.exit(code)


def finish(passed: bool) -> None:
    """Exit 0 when every assertion held, 1 otherwise."""
    sys.exit(0 if passed else 1)


def y_spec_options(func: Callable) -> Callable:
    """Options for the second configuration Y (same ring as X)."""
    options = [
        click.option('--y-r', type=int, default=None, help='Codimension of Y (default: same as X)'),
        click.option('--y-s', type=int, default=None, help='Number of forms of Y'),
        click.option('--y-degrees', type=str, default=None, help='Comma-separated degrees of Y'),
        click.option('--y-kind', type=click.Choice(KINDS), default='general', help='How the forms of Y are sampled'),
        click.option('--y-spec-file', type=click.Path(exists=True, dir_okay=False), default=None,
                     help='Spec file for Y'),
    ]
    for option in reversed(options):
        func = option(func)
    return func
