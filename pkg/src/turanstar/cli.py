"""Command line front end.

Exit codes: 0 when everything checked is MATCH or SKIPPED, 1 when any
verification row is MISMATCH, 2 for usage errors.
"""

from __future__ import annotations

import json
import sys

import click

from .constructions import (
    capped_bipartite,
    clique_matching_extremal,
    clique_star_forest_extremal,
    complete_bipartite,
    joined_capped_extremal,
    joined_regular_extremal,
    regular_triangle_free,
    turan_graph,
)
from .detectors import Clique, ForbiddenFamily, Matching, contains_clique
from .detectors import _pattern_spec, contains_star_forest, max_matching_size
from .formulas import (
    ex_clique_matching,
    ex_clique_star_forest,
    ex_star,
    ex_triangle_star_forest,
    extremal_family_edges,
)
from .graph6 import graph6_decode, graph6_encode, to_edge_list_json
from .graphs import Graph
from .harness import ResultCache, SUITE_NAMES, TOOL_VERSION, emit_report, run_suite
from .oracle import brute_force_ex


def _usage(err: Exception) -> click.UsageError:
    return click.UsageError(str(err))


def _need(name: str, value):
    if value is None:
        raise click.UsageError(f"missing required option --{name} for this builder")
    return value


@click.group()
@click.version_option(version=TOOL_VERSION, prog_name="turanstar")
def main():
    """Extremal graphs avoiding a clique and a star forest: build, check, count."""


_BUILDERS = (
    "turan",
    "complete-bipartite",
    "regular",
    "capped-bipartite",
    "joined-regular",
    "joined-capped",
    "clique-matching",
    "clique-star-forest",
)


@main.command()
@click.option("--builder", type=click.Choice(_BUILDERS), required=True)
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=None)
@click.option("--s", type=int, default=None)
@click.option("--l", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["graph6", "json"]), default="graph6")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def construct(builder, n, k, s, l, fmt, out):
    """Build one named graph and print it."""
    try:
        if builder == "turan":
            g = turan_graph(n, _need("k", k))
        elif builder == "complete-bipartite":
            s = _need("s", s)
            if not 0 <= s <= n:
                raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")
            g = complete_bipartite(s, n - s)
        elif builder == "regular":
            g, _ = regular_triangle_free(n, _need("l", l))
        elif builder == "capped-bipartite":
            g, _, _ = capped_bipartite(n, _need("l", l))
        elif builder == "joined-regular":
            g = joined_regular_extremal(n, _need("s", s), _need("l", l))
        elif builder == "joined-capped":
            g = joined_capped_extremal(n, _need("s", s), _need("l", l))
        elif builder == "clique-matching":
            g = clique_matching_extremal(n, _need("k", k), _need("s", s))
        else:
            g = clique_star_forest_extremal(n, _need("k", k), _need("s", s), _need("l", l))
    except ValueError as err:
        raise _usage(err)
    if fmt == "graph6":
        text = graph6_encode(g) + "\n"
    else:
        text = to_edge_list_json(g) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


def _parse_family(spec: str) -> ForbiddenFamily:
    try:
        return ForbiddenFamily.parse(spec)
    except ValueError as err:
        raise _usage(err)


def _detect_one(g: Graph, family: ForbiddenFamily) -> list[str]:
    found = []
    for pat in family.patterns:
        if isinstance(pat, Clique):
            hit = contains_clique(g, pat.size)
        elif isinstance(pat, Matching):
            hit = max_matching_size(g) >= pat.edges
        else:
            hit = contains_star_forest(g, pat.copies, pat.leaves)
        if hit:
            found.append(_pattern_spec(pat))
    return found


@main.command()
@click.option("--family", required=True, help="e.g. 'clique:3,starforest:2x2'")
@click.option("--g6", multiple=True, help="graph6 string; repeatable")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
def detect(family, g6, infile, fmt):
    """Report which forbidden patterns occur in each input graph."""
    fam = _parse_family(family)
    codes = list(g6)
    if infile:
        with open(infile, encoding="utf-8") as handle:
            codes += [line.strip() for line in handle if line.strip()]
    if not codes and not sys.stdin.isatty():
        codes = [line.strip() for line in sys.stdin if line.strip()]
    if not codes:
        raise click.UsageError("no input graphs; pass --g6, --in, or pipe graph6 lines")
    results = []
    for code in codes:
        try:
            g = graph6_decode(code)
        except ValueError as err:
            raise _usage(err)
        results.append({"graph": code, "found": _detect_one(g, fam)})
    if fmt == "json":
        click.echo(json.dumps(results, indent=2))
    else:
        for item in results:
            verdict = "FREE" if not item["found"] else "CONTAINS " + ",".join(item["found"])
            click.echo(f"{item['graph']}\t{verdict}")


_FORMULAS = ("star", "clique-matching", "clique-star-forest", "triangle-star-forest", "family-pair")


@main.command()
@click.option("--which", type=click.Choice(_FORMULAS), required=True)
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=None)
@click.option("--s", type=int, default=None)
@click.option("--l", type=int, default=None)
def formula(which, n, k, s, l):
    """Evaluate a closed form; prints JSON with value, validity, source."""
    try:
        if which == "star":
            result = ex_star(n, _need("l", l))
        elif which == "clique-matching":
            result = ex_clique_matching(n, _need("k", k), _need("s", s))
        elif which == "clique-star-forest":
            result = ex_clique_star_forest(n, _need("k", k), _need("s", s), _need("l", l))
        elif which == "triangle-star-forest":
            result = ex_triangle_star_forest(n, _need("s", s), _need("l", l))
        else:
            e1, e2 = extremal_family_edges(n, _need("s", s), _need("l", l))
            click.echo(json.dumps({"regular_join": e1, "capped_join": e2}))
            return
    except ValueError as err:
        raise _usage(err)
    click.echo(json.dumps(result.as_dict()))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--family", required=True)
@click.option("--jobs", type=int, default=1)
@click.option("--cache", type=click.Path(dir_okay=False), default=None)
def oracle(n, family, jobs, cache):
    """Exhaustively compute the extremal number and graphs for a family."""
    fam = _parse_family(family)
    store = ResultCache(cache) if cache else None
    record = store.lookup(n, fam) if store else None
    if record is None:
        try:
            record = brute_force_ex(n, fam, jobs=jobs)
        except ValueError as err:
            raise _usage(err)
        if store:
            store.append(record)
    click.echo(json.dumps(record.to_json_dict()))


def _emit_many(reports, fmt, out):
    blobs = [emit_report(report, fmt) for report in reports]
    data = b"\n".join(blobs)
    if out:
        with open(out, "wb") as handle:
            handle.write(data)
    else:
        click.echo(data, nl=False)


@main.command()
@click.option("--suite", "suites", multiple=True, type=click.Choice(SUITE_NAMES))
@click.option("--jobs", type=int, default=1)
@click.option("--cache", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "table"]), default="table")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
def verify(ctx, suites, jobs, cache, fmt, out):
    """Run verification suites; exit 1 if any row mismatches."""
    names = suites or SUITE_NAMES
    store = ResultCache(cache) if cache else None
    reports = []
    for name in names:
        try:
            reports.append(run_suite(name, jobs=jobs, cache=store))
        except ValueError as err:
            raise _usage(err)
    _emit_many(reports, fmt, out)
    if not all(report.ok() for report in reports):
        ctx.exit(1)


@main.command()
@click.option("--k", type=int, default=2)
@click.option("--s", type=int, default=1)
@click.option("--l", type=int, default=2)
@click.option("--n-max", type=int, default=11)
@click.option("--jobs", type=int, default=1)
@click.option("--cache", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "table"]), default="table")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
def sweep(ctx, k, s, l, n_max, jobs, cache, fmt, out):
    """Tabulate exhaustive counts against the closed form as n grows."""
    store = ResultCache(cache) if cache else None
    try:
        report = run_suite(
            "boundary-sweep",
            {"k": k, "s": s, "l": l, "n_max": n_max},
            jobs=jobs,
            cache=store,
        )
    except ValueError as err:
        raise _usage(err)
    _emit_many([report], fmt, out)
    if not report.ok():
        ctx.exit(1)


if __name__ == "__main__":
    main()
