"""Command-line surface.

Thin client over the library: each subcommand parses its input files,
calls one core operation, and prints a deterministic report.  Exit codes:
0 success / homotopic, 1 distinct, 2 unknown (budget exhausted), 64 input
parse failure, 65 domain error (bad alphabet, unclassifiable phrase, ...).
"""

from __future__ import annotations

import functools
import sys

import click

from .classify import atlas
from .grammar import (
    ParseError,
    parse_alphabet_document,
    parse_document,
    serialize_document,
)
from .moves import SearchBudget, contract_bounded, homotopic_bounded
from .phrases import desingularize
from .reports import (
    atlas_report,
    classify_report,
    invariant_report,
    phrase_summary,
    render_lines,
    verdict_report,
    verdict_text,
)

EXIT_PARSE = 64
EXIT_DOMAIN = 65
_VERDICT_EXIT = {"homotopic": 0, "distinct": 1, "unknown": 2}


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror or e}") from None


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_PARSE)
        except (ValueError, RuntimeError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_DOMAIN)

    return wrapper


def _budget_options(fn):
    fn = click.option(
        "--budget-letters", type=int, default=None, help="Letter cap for the search."
    )(fn)
    fn = click.option(
        "--budget-states", type=int, default=None, help="Visited-state cap."
    )(fn)
    fn = click.option(
        "--budget-depth", type=int, default=None, help="Search depth cap."
    )(fn)
    return fn


def _format_option(fn):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "structured"]),
        default="text",
        help="Report style; structured is sorted key = value lines.",
    )(fn)


def _budget(letters, states, depth) -> SearchBudget:
    default = SearchBudget()
    return SearchBudget(
        max_letters=letters,
        max_states=states if states is not None else default.max_states,
        max_depth=depth if depth is not None else default.max_depth,
    )


@click.group()
@click.version_option(package_name="nanophrases", prog_name="nanophrases")
def main():
    """Nanophrases: homotopy of words and phrases over involutive alphabets."""


@main.command()
@click.argument("file", type=click.Path())
@_format_option
@_guarded
def parse(file, fmt):
    """Parse a phrase document and print its canonical form."""
    _, phrase = parse_document(_read(file))
    if fmt == "text":
        click.echo(serialize_document(phrase), nl=False)
    else:
        click.echo(render_lines(phrase_summary(phrase)))


@main.command()
@click.argument("file", type=click.Path())
@_format_option
@_guarded
def desing(file, fmt):
    """Desingularize a phrase and print the resulting nanophrase."""
    _, phrase = parse_document(_read(file))
    nano = desingularize(phrase)
    if fmt == "text":
        click.echo(serialize_document(nano), nl=False)
    else:
        click.echo(render_lines(phrase_summary(nano)))


@main.command()
@click.argument("file", type=click.Path())
@click.option(
    "--L",
    "-L",
    "restrict",
    multiple=True,
    help="Representative symbol for a restriction report line; repeatable.",
)
@_format_option
@_guarded
def invariants(file, restrict, fmt):
    """Print the invariant battery values of a phrase."""
    _, phrase = parse_document(_read(file))
    sets = ((tuple(restrict),) if restrict else ())
    click.echo(render_lines(invariant_report(phrase, sets)))


@main.command()
@click.argument("left", type=click.Path())
@click.argument("right", type=click.Path())
@_budget_options
@_format_option
@_guarded
def homotopic(left, right, budget_letters, budget_states, budget_depth, fmt):
    """Decide whether two phrases are homotopic.  Exits 0/1/2."""
    _, p1 = parse_document(_read(left))
    _, p2 = parse_document(_read(right))
    verdict = homotopic_bounded(p1, p2, _budget(budget_letters, budget_states, budget_depth))
    if fmt == "text":
        click.echo(verdict_text(verdict))
    else:
        click.echo(render_lines(verdict_report(verdict)))
    sys.exit(_VERDICT_EXIT[verdict.kind])


@main.command()
@click.argument("file", type=click.Path())
@_budget_options
@_format_option
@_guarded
def reduce(file, budget_letters, budget_states, budget_depth, fmt):
    """Contract a phrase to the empty phrase if possible.  Exits 0/1/2."""
    _, phrase = parse_document(_read(file))
    verdict = contract_bounded(phrase, _budget(budget_letters, budget_states, budget_depth))
    if fmt == "text" and verdict.kind != "unknown":
        click.echo(verdict_text(verdict))
    else:
        lines = verdict_report(verdict)
        if verdict.kind == "unknown":
            # partial report: what is known about the input despite exhaustion
            lines = phrase_summary(phrase) + invariant_report(phrase) + lines
        click.echo(render_lines(lines))
    sys.exit(_VERDICT_EXIT[verdict.kind])


@main.command()
@click.argument("file", type=click.Path())
@_format_option
@_guarded
def classify(file, fmt):
    """Name the homotopy class of a phrase with at most three entries."""
    _, phrase = parse_document(_read(file))
    click.echo(render_lines(classify_report(phrase)))


@main.command("atlas")
@click.argument("file", type=click.Path())
@click.option("--k", "k", type=int, required=True, help="Number of components.")
@_budget_options
@_format_option
@_guarded
def atlas_cmd(file, k, budget_letters, budget_states, budget_depth, fmt):
    """Classify every short phrase over the alphabet in FILE."""
    base = parse_alphabet_document(_read(file))
    if k < 1:
        raise ValueError("k must be at least 1")
    result = atlas(base, k, _budget(budget_letters, budget_states, budget_depth))
    click.echo(render_lines(atlas_report(result)))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("nanophrases.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
