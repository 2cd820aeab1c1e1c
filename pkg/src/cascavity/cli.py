"""Command-line interface: spectrum, delta, profile, darkmode, match.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import numpy as np

from . import __version__
from .config import load_config
from .errors import CascavityError, ConfigError
from . import runs

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _common_options(f):
    f = click.option("--config", "config_path", required=True, type=click.Path(), help="Path to the JSON run configuration.")(f)
    f = click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None, help="Output directory (overrides output.directory).")(f)
    f = click.option("--svg", is_flag=True, default=False, help="Also write SVG plots.")(f)
    f = click.option("--grid-points", type=int, default=None, help="Override the sweep grid size.")(f)
    f = click.option("--quiet", is_flag=True, default=False, help="Suppress the file summary.")(f)
    return f


def _execute(runner, config_path, out_dir, svg, grid_points, quiet):
    try:
        config = load_config(config_path)
        if grid_points is not None and grid_points < 2:
            raise ConfigError(f"--grid-points must be at least 2, got {grid_points}")
    except ConfigError as exc:
        click.echo(f"configuration error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)

    target = Path(out_dir) if out_dir is not None else Path(config.output.directory)
    target.mkdir(parents=True, exist_ok=True)
    want_svg = svg or config.output.svg

    try:
        paths = runner(config, target, want_svg, grid_points)
    except ConfigError as exc:
        click.echo(f"configuration error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    except (CascavityError, ArithmeticError, np.linalg.LinAlgError) as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)

    if not quiet:
        for p in paths:
            click.echo(f"wrote {p}")


@click.group()
@click.version_option(__version__, prog_name="cascavity")
def main():
    """Cascaded-cavity simulator: scattering and coupled-mode models side by side."""


@main.command()
@_common_options
def spectrum(config_path, out_dir, svg, grid_points, quiet):
    """Transmission spectrum of the selected model(s)."""
    _execute(runs.run_spectrum, config_path, out_dir, svg, grid_points, quiet)


@main.command()
@_common_options
def delta(config_path, out_dir, svg, grid_points, quiet):
    """Side-peak distance difference between the models over a zeta grid."""
    _execute(runs.run_delta, config_path, out_dir, svg, grid_points, quiet)


@main.command()
@_common_options
def profile(config_path, out_dir, svg, grid_points, quiet):
    """Intracavity intensities of both models versus drive frequency."""
    _execute(runs.run_profile, config_path, out_dir, svg, grid_points, quiet)


@main.command()
@_common_options
def darkmode(config_path, out_dir, svg, grid_points, quiet):
    """Fiber intensity under two-sided drive versus frequency and pump phase."""
    _execute(runs.run_darkmode, config_path, out_dir, svg, grid_points, quiet)


@main.command()
@_common_options
def match(config_path, out_dir, svg, grid_points, quiet):
    """Matched coupled-mode parameters for a geometry, with provenance."""
    _execute(runs.run_match, config_path, out_dir, svg, grid_points, quiet)


if __name__ == "__main__":
    main()
