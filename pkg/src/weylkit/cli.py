"""Command-line interface.

Exit status: 0 success, 1 domain error (or a failed validation), 2 usage error.
"""
from __future__ import annotations

import functools
from fractions import Fraction
import sys
from pathlib import Path

import click

from . import roots as rs
from .affine import format_word, parse_word
from .alcoves import DEFAULT_RADIUS_CAP, CoxeterComplex, format_gallery
from .errors import WeylError
from .geometry import coroot
from .render import RenderSpec, render_svg
from .weyl import generate, verify_angle_condition


def _word_text(word) -> str:
    return format_word(word) if word else "(empty)"


def domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except WeylError as exc:
            raise click.ClickException(str(exc)) from exc
    return wrapper


def system_options(fn):
    fn = click.option("--json", "json_path", type=click.Path(dir_okay=False), help="Root system JSON file.")(fn)
    fn = click.option("--type", "type_", metavar="TYPE", help="Classical type, e.g. C2, A3, D4.")(fn)
    return fn


def load_system(type_: str | None, json_path: str | None) -> tuple[str, rs.RootSystem]:
    if (type_ is None) == (json_path is None):
        raise click.UsageError("give exactly one of --type or --json")
    if type_ is not None:
        family = rs.Family.parse(type_)
        return str(family), rs.build(family)
    try:
        text = Path(json_path).read_text()
    except OSError as exc:
        raise WeylError(f"cannot read {json_path}: {exc.strerror}") from exc
    return json_path, rs.loads(text)


def word_option(required: bool):
    return click.option(
        "--word", required=required,
        help='Comma-separated generator indices; 0 is s_{theta,1}, 1..r the simple reflections. "" is the identity.',
    )


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Root systems, Weyl groups and alcove combinatorics in exact arithmetic."""


@main.command()
@system_options
@domain_errors
def info(type_, json_path):
    """Roots, coroots, simple roots, highest root and Coxeter matrix."""
    name, phi = load_system(type_, json_path)
    roots = sorted(phi.roots, key=lambda v: v.coords, reverse=True)
    click.echo(f"type: {name}")
    click.echo(f"ambient dimension: {phi.ambient_dim}")
    click.echo(f"rank: {phi.rank}")
    click.echo(f"roots ({len(roots)}):")
    for r in roots:
        click.echo(f"  {r}")
    click.echo(f"coroots ({len(roots)}):")
    for r in roots:
        click.echo(f"  {coroot(r)}")
    click.echo("simple roots:")
    for i, r in enumerate(phi.simple_roots, start=1):
        click.echo(f"  {i}: {r}")
    if rs.is_irreducible(phi):
        click.echo(f"highest root: {phi.highest_root}")
    else:
        click.echo("highest root: none (reducible system)")
    click.echo("Coxeter matrix:")
    for row in rs.coxeter_matrix(phi).entries:
        click.echo("  " + " ".join(str(x) for x in row))


@main.command()
@system_options
@domain_errors
def validate(type_, json_path):
    """Check the crystallographic root system axioms; exit 1 on failure."""
    _, phi = load_system(type_, json_path)
    report = rs.validate_axioms(phi)
    click.echo(str(report))
    if report.ok:
        click.echo(f"irreducible: {'yes' if rs.is_irreducible(phi) else 'no'}")
    else:
        click.echo("witness: " + ", ".join(str(v) for v in report.witness))
        sys.exit(1)


@main.command()
@system_options
@domain_errors
def dual(type_, json_path):
    """The dual root system {coroot(a)}."""
    _, phi = load_system(type_, json_path)
    d = rs.dual_system(phi)
    for r in sorted(d.roots, key=lambda v: v.coords, reverse=True):
        click.echo(str(r))


@main.command()
@system_options
@domain_errors
def diagram(type_, json_path):
    """ASCII Coxeter diagram and the recognized family."""
    _, phi = load_system(type_, json_path)
    m = rs.coxeter_matrix(phi)
    click.echo(rs.coxeter_diagram(m))
    fam = rs.recognize_family(m)
    click.echo(f"family: {fam[0]}_{fam[1]}" if fam else "family: unrecognized")


@main.command()
@system_options
@click.option("--cap", default=10**6, show_default=True, help="Maximum group size.")
@domain_errors
def group(type_, json_path, cap):
    """Order of the finite Weyl group and a word for each element."""
    _, phi = load_system(type_, json_path)
    table = generate(phi, cap)
    m = rs.coxeter_matrix(phi)
    click.echo(f"order: {len(table)}")
    click.echo("generators:")
    for i, a in enumerate(phi.simple_roots, start=1):
        click.echo(f"  s{i} = reflection in {a}")
    click.echo("Coxeter matrix:")
    for row in m.entries:
        click.echo("  " + " ".join(str(x) for x in row))
    click.echo("wall angles: " + ("ok" if all(p.ok for p in verify_angle_condition(phi)) else "FAILED"))
    click.echo("elements:")
    for i, w in enumerate(table.words):
        click.echo(f"  {i}: {_word_text(w)}")


def _complex_and_word(type_, json_path, word_text):
    _, phi = load_system(type_, json_path)
    cx = CoxeterComplex(phi)
    word = parse_word(word_text)
    return cx, word, cx.group.word_to_element(word)


@main.command()
@system_options
@word_option(required=True)
@click.option("--check", is_flag=True, help="Cross-check against breadth-first gallery distance.")
@click.option("--radius-cap", default=DEFAULT_RADIUS_CAP, show_default=True)
@domain_errors
def length(type_, json_path, word, check, radius_cap):
    """Length of a word, counted as separating hyperplanes."""
    cx, _, g = _complex_and_word(type_, json_path, word)
    n = cx.length(g)
    click.echo(f"length: {n}")
    if check:
        d = cx.bfs_distance(g, radius_cap)
        click.echo(f"bfs distance: {d}")
        click.echo(f"agree: {'yes' if d == n else 'no'}")
        if d != n:
            sys.exit(1)


@main.command()
@system_options
@word_option(required=True)
@domain_errors
def reduce(type_, json_path, word):
    """A reduced word for the element a word evaluates to."""
    cx, _, g = _complex_and_word(type_, json_path, word)
    red = cx.reduced_word(g)
    same = cx.group.word_to_element(red) == g
    click.echo(f"reduced word: {_word_text(red)}")
    click.echo(f"length: {len(red)}")
    click.echo(f"evaluation check: {'ok' if same else 'MISMATCH'}")
    if not same:
        sys.exit(1)


@main.command()
@system_options
@word_option(required=True)
@domain_errors
def gallery(type_, json_path, word):
    """Minimal gallery from the fundamental alcove to the word's alcove."""
    cx, _, g = _complex_and_word(type_, json_path, word)
    gal = cx.gallery(g)
    click.echo(f"gallery length: {gal.length}")
    if gal.length:
        click.echo(format_gallery(gal))


def _parse_window(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise click.BadParameter("expected xmin,xmax,ymin,ymax", param_hint="--window")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"not a rational number list: {text!r}", param_hint="--window") from None


@main.command()
@system_options
@click.option("--window", required=True, help="xmin,xmax,ymin,ymax (rationals allowed, e.g. -1/2).")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Output SVG file.")
@word_option(required=False)
@click.option("--ppu", default=100, show_default=True, help="Pixels per unit length.")
@domain_errors
def render(type_, json_path, window, out, word, ppu):
    """Write an SVG of the affine hyperplanes in a window."""
    bounds = _parse_window(window)
    _, phi = load_system(type_, json_path)
    cx = CoxeterComplex(phi)
    highlight = None
    if word is not None:
        highlight = cx.gallery(cx.group.word_to_element(parse_word(word)))
    svg = render_svg(cx, RenderSpec(bounds, ppu, highlight))
    Path(out).write_text(svg)
    click.echo(f"wrote {out}")


@main.command()
@system_options
@click.option("--out", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
@domain_errors
def export(type_, json_path, out):
    """Export the root system as JSON."""
    _, phi = load_system(type_, json_path)
    text = rs.dumps(phi)
    if out:
        Path(out).write_text(text + "\n")
    else:
        click.echo(text)


if __name__ == "__main__":
    main()
