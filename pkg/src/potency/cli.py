"""Command-line entry point.

Exit codes: 0 success, 1 a check or pipeline stage failed, 2 usage or parse error.
"""

from __future__ import annotations

import logging
import sys

import click

from . import geometry
from .complex import check_closed_3_manifold, euler_characteristic, f_vector, format_complex, read_complex
from .errors import ParseError, PotencyError, UnknownName
from .homology import homology_groups
from .knot import analyze_knot
from .presentation import DEFAULT_BUDGET
from .quotient import barnette_complex, knot_cycle_complex, mobius_complex, prism_complex
from .verify import DEFAULT_GRID, run_verification, summary_line

NAMED_COMPLEXES = {
    "prism": prism_complex,
    "barnette": barnette_complex,
    "mobius": mobius_complex,
    "knot": knot_cycle_complex,
}


def named_complex(name: str):
    try:
        return NAMED_COMPLEXES[name]()
    except KeyError:
        raise UnknownName(f"unknown complex {name!r}; expected one of {', '.join(NAMED_COMPLEXES)}") from None


def _load(path):
    try:
        return read_complex(path)
    except ParseError as err:
        click.echo(f"error: {path}: {err}", err=True)
        sys.exit(2)
    except OSError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)


def _write(text, out):
    if out is None or out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log pipeline progress to stderr.")
def main(verbose):
    """Build and check the simplicial complexes of the three-point potency of the circle."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.argument("name")
@click.option("-o", "--out", default=None, help="Output file (default stdout).")
def emit(name, out):
    """Write a named complex (prism, barnette, mobius, knot) in the complex text format."""
    try:
        K = named_complex(name)
    except UnknownName as err:
        click.echo(f"error: {err.args[0]}", err=True)
        sys.exit(2)
    _write(format_complex(K), out)


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
def homology(path):
    """Integral homology, one line per dimension."""
    K = _load(path)
    for d, H in enumerate(homology_groups(K)):
        click.echo(f"H{d} rank={H.betti} torsion={list(H.torsion)}")


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
def links(path):
    """Closed 3-manifold checks on vertex and edge links."""
    K = _load(path)
    report = check_closed_3_manifold(K)
    for name, passed, detail in report.entries:
        click.echo(f"{name} {'PASS' if passed else 'FAIL'} {detail}".rstrip())
    click.echo(f"closed_3_manifold {'yes' if report.ok else 'no'}")
    sys.exit(0 if report.ok else 1)


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
def fvector(path):
    """Face counts by dimension and Euler characteristic."""
    K = _load(path)
    click.echo("f_vector " + " ".join(map(str, f_vector(K))))
    click.echo(f"euler {euler_characteristic(K)}")


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--knot", "knot_path", required=True, type=click.Path(dir_okay=False),
              help="1-dimensional subcomplex to take the complement of.")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True, type=click.IntRange(min=0),
              help="Maximum number of Tietze eliminations.")
def alexander(path, knot_path, budget):
    """Knot group pipeline: complement, presentation, Alexander polynomial, S3 test."""
    K = _load(path)
    L = _load(knot_path)
    try:
        result = analyze_knot(K, L, budget=budget)
    except PotencyError as err:
        stage = getattr(err, "stage", "input")
        click.echo(f"error: stage {stage}: {type(err).__name__}: {err}", err=True)
        sys.exit(1)
    for line in result.summary_lines():
        click.echo(line)


@main.command("verify-paper")
@click.option("--grid", default=DEFAULT_GRID, show_default=True, type=click.IntRange(min=1),
              help="Sampling resolution for the geometry checks.")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True, type=click.IntRange(min=0),
              help="Maximum number of Tietze eliminations.")
def verify_paper(grid, budget):
    """Run every check; one CHECK line each, exit 0 iff all pass."""
    report = run_verification(grid=grid, budget=budget)
    for line in report.lines():
        click.echo(line)
    click.echo(summary_line(report))
    sys.exit(0 if report.ok else 1)


@main.command("export-geometry")
@click.option("--off", "off_path", default=None, help="Write the prism boundary as an OFF mesh.")
@click.option("--polyline", "poly_path", default=None, help="Write the one-point stratum segments.")
def export_geometry(off_path, poly_path):
    """Exact rational exports of the prism and its one-point stratum."""
    if off_path is None and poly_path is None:
        raise click.UsageError("give --off and/or --polyline")
    if off_path is not None:
        _write(geometry.format_prism_off(), off_path)
    if poly_path is not None:
        _write(geometry.format_d_polylines(), poly_path)


if __name__ == "__main__":
    main()
