"""Click CLI entry point for starconf."""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from starconf.cli_utils import run_options, spec_options, y_spec_options
from starconf.config import GRIDS, load_config

logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


@click.group()
def main() -> None:
    """starconf: exact computations on star-configurations in projective space."""
    pass


@main.command()
@spec_options
@click.option('--t-max', type=int, default=None, help='Last degree to compute (default: d+n+1)')
@run_options
def hilbert(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose):
    """Hilbert function of R/I and its first saturation degree sigma."""
    from starconf.cli_compute import handle_hilbert
    handle_hilbert(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose)


@main.command()
@spec_options
@run_options
def degree(n, r, s, degrees, kind, spec_file, seed, prime, fmt, output, verbose):
    """Number of points of a zero-dimensional star-configuration (r = n)."""
    from starconf.cli_compute import handle_degree
    handle_degree(n, r, s, degrees, kind, spec_file, seed, prime, fmt, output, verbose)


@main.command()
@spec_options
@click.option('--verify', is_flag=True, help='Compare with Koszul homology computed from scratch')
@click.option('--j-max', type=int, default=None, help='Largest internal degree for --verify')
@run_options
def betti(n, r, s, degrees, kind, spec_file, verify, j_max, seed, prime, fmt, output, verbose):
    """Predicted graded Betti table of R/I."""
    from starconf.cli_compute import handle_betti
    handle_betti(n, r, s, degrees, kind, spec_file, verify, j_max, seed, prime, fmt, output, verbose)


@main.command('verify-intersection')
@spec_options
@click.option('--t-max', type=int, default=None, help='Last degree to compare (default: d+n+1)')
@run_options
def verify_intersection(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose):
    """Check that the star ideal equals the intersection of its component ideals."""
    from starconf.cli_compute import handle_verify_intersection
    handle_verify_intersection(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose)


@main.command()
@spec_options
@click.option('--t-max', type=int, default=None, help='Last degree to check (default: d+n)')
@run_options
def bdl(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose):
    """Hilbert function identity for the basic double link of the (r,s) ideal."""
    from starconf.cli_compute import handle_bdl
    handle_bdl(n, r, s, degrees, kind, spec_file, t_max, seed, prime, fmt, output, verbose)


@main.command()
@spec_options
@y_spec_options
@click.option('--generators', type=str, default=None,
              help='Check R/J for explicit generators instead, separated by ";" (needs --n)')
@click.option('--element', type=str, default='random', help='Linear form to multiply by, or "random"')
@click.option('--extra-linear', is_flag=True, help='Append a general linear form L to Y and also test L')
@click.option('--t-max', type=int, default=None, help='Last degree to check')
@run_options
def wlp(n, r, s, degrees, kind, spec_file, y_r, y_s, y_degrees, y_kind, y_spec_file,
        generators, element, extra_linear, t_max, seed, prime, fmt, output, verbose):
    """Weak Lefschetz property of R/(I_X + I_Y)."""
    from starconf.cli_lefschetz import handle_wlp
    handle_wlp(
        (n, r, s, degrees, kind, spec_file), (y_r, y_s, y_degrees, y_kind, y_spec_file),
        generators, element, extra_linear, t_max, seed, prime, fmt, output, verbose,
    )


@main.command('union-hf')
@spec_options
@y_spec_options
@click.option('--t-max', type=int, default=None, help='Last degree (default: the larger d+n+1)')
@run_options
def union_hf(n, r, s, degrees, kind, spec_file, y_r, y_s, y_degrees, y_kind, y_spec_file,
             t_max, seed, prime, fmt, output, verbose):
    """Hilbert function of X u Y and the identity H(A) = H_X + H_Y - H_(X u Y)."""
    from starconf.cli_lefschetz import handle_union_hf
    handle_union_hf(
        (n, r, s, degrees, kind, spec_file), (y_r, y_s, y_degrees, y_kind, y_spec_file),
        t_max, seed, prime, fmt, output, verbose,
    )


@main.command()
@click.option('--n', 'n', type=int, required=True, help='Ambient dimension')
@click.option('--s', 's', type=int, required=True, help='Number of forms of X (degree d each)')
@click.option('--t', 't', type=int, required=True, help='Number of forms of Y (degree d each)')
@click.option('--d', 'd', type=int, required=True, help='Degree of every form')
@click.option('--t-max', type=int, default=None, help='Last degree to check')
@run_options
def experiment(n, s, t, d, t_max, seed, prime, fmt, output, verbose):
    """Probe a pair no known result covers; the verdict is reported, not asserted."""
    from starconf.cli_lefschetz import handle_experiment
    handle_experiment(n, s, t, d, t_max, seed, prime, fmt, output, verbose)


@main.command()
@click.option('--grid', type=click.Choice(GRIDS), default=None, help='Grid size (env STARCONF_GRID)')
@click.option('--workers', type=int, default=None, help='Worker processes (env STARCONF_WORKERS)')
@click.option('--only', type=str, default=None, help='Run only cells whose key starts with this prefix')
@click.option('--seed', type=int, default=None, help='RNG seed (env STARCONF_SEED)')
@click.option('--prime', type=int, default=None, help='Field modulus (env STARCONF_PRIME)')
@click.option('--format', 'fmt', type=click.Choice(['text', 'json', 'csv']), default='text', help='Summary format')
@click.option('--output', '-o', type=click.Path(file_okay=False), default=None,
              help='Directory for per-cell JSON reports')
@click.option('--verbose', '-v', is_flag=True, help='Verbose output')
def suite(grid, workers, only, seed, prime, fmt, output, verbose):
    """Run the acceptance grid."""
    from starconf.cli_suite import handle_suite
    handle_suite(grid, workers, only, seed, prime, fmt, output, verbose)


@main.command()
@click.option('--env', is_flag=True, help='Show .env file path')
def config(env):
    """Display active configuration values."""
    try:
        cfg = load_config()

        if env:
            env_file = Path('.env')
            click.echo(f".env file: {env_file.resolve()}")
            click.echo(f"Exists: {env_file.exists()}")
            click.echo("")

        click.echo("Active Configuration:")
        click.echo(f"  Seed: {cfg.seed}")
        click.echo(f"  Prime: {cfg.prime}")
        click.echo(f"  Output Directory: {cfg.output_dir}")
        click.echo(f"  Grid: {cfg.grid}")
        click.echo(f"  Workers: {cfg.workers}")
        click.echo(f"  Verbose: {cfg.verbose}")

    except Exception as e:
        click.secho(f"Error loading configuration: {e}", fg='red', err=True)
        sys.exit(1)


if __name__ == '__main__':
    main()
