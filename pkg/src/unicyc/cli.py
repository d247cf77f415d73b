"""Command line interface.

Subcommands: compute, audit, verify, enumerate, extremal-search,
construct. Exit codes: 0 success, 1 usage errors, 2 domain or input
errors, 3 failed verification (a violated bound or a sharpness
mismatch). Floats print with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .bounds import (
    AuditConfig,
    DEFAULT_ALPHA_GRID,
    DEFAULT_A_GRID,
    TABULAR_COLUMNS,
    _fmt_value,
    audit,
    catalog,
    tabular_rows,
    render_report_text,
)
from .enumeration import enumerate_unicyclic, extremal_search
from .extremal import (
    Cycle,
    HubPaths,
    HubPendants,
    LoadedCycle,
    TriangleStar,
    build_cycle,
    build_hub_paths,
    build_hub_pendants,
    build_loaded_cycle,
    build_triangle_star,
)
from .graphs import (
    Graph,
    ParseError,
    canonical_code,
    degree_sequence,
    is_unicyclic,
    max_degree,
    parse_edge_list,
    pendant_count,
    serialize_edge_list,
)
from .indices import evaluate, parse_index
from .majorization import DEFAULT_TOLERANCE, value_mode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

DEFAULT_INDICES = "M1,F,ID,NK,NK*,W"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; this tool reserves 2 for
    # domain errors, so usage maps to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _split_tokens(text: str) -> list[str]:
    return [t for t in text.replace(",", " ").split() if t]


def _csv_floats(text: str) -> tuple[float, ...]:
    return tuple(float(t) for t in _split_tokens(text))


def _emit_tabular(columns, rows):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..", 1) if ".." in text else [text, text]
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# compute


def _cmd_compute(args) -> int:
    specs = [parse_index(tok) for tok in _split_tokens(args.indices)]
    if not specs:
        raise UsageError("no indices given")
    tab = []
    for path in args.files:
        g = _read_graph(path)
        name = "<stdin>" if path == "-" else path
        values = [(spec.label, evaluate(spec, g)) for spec in specs]
        if args.output == "tabular":
            tab.extend((name, label, _fmt_value(v), value_mode(v)) for label, v in values)
        else:
            print(
                f"{name}: n={g.n} m={g.m} unicyclic={'yes' if is_unicyclic(g) else 'no'} "
                f"degrees={degree_sequence(g)}"
            )
            for label, v in values:
                print(f"  {label} = {_fmt_value(v)} ({value_mode(v)})")
    if args.output == "tabular":
        _emit_tabular(("source", "index", "value", "mode"), tab)
    return EXIT_OK


# ---------------------------------------------------------------------------
# audit


def _audit_config(args) -> AuditConfig:
    return AuditConfig(
        tolerance=args.tolerance,
        alpha_grid=tuple(args.alpha),
        a_grid=tuple(args.a),
    )


def _cmd_audit(args) -> int:
    config = _audit_config(args)
    status = EXIT_OK
    tab = []
    for path in args.files:
        g = _read_graph(path)
        report = audit(g, config)
        if args.output == "tabular":
            tab.extend(tabular_rows(report))
        else:
            print(render_report_text(report))
        if not report.clean:
            status = EXIT_VERIFY
    if args.output == "tabular":
        _emit_tabular(TABULAR_COLUMNS, tab)
    return status


# ---------------------------------------------------------------------------
# verify


def _verify_one_n(task):
    """Audit every class on n vertices; return plain aggregate rows.

    Top-level function so ProcessPoolExecutor can pickle it. One result
    row per (bound, param): (bound_id, param_label, iff_sharp, checks,
    violations, tight, iff_breaks, cells, attained_cells, member_cells,
    stuck_cells) where stuck = family member present but bound never
    attained in that cell.
    """
    n, max_deg, pend, tol, alphas, a_values = task
    config = AuditConfig(tolerance=tol, alpha_grid=alphas, a_grid=a_values)
    scope_of = {b.id: b.scope for b in catalog()}
    agg: dict[tuple[str, str], dict] = {}
    graphs = 0
    for g in enumerate_unicyclic(n, max_deg, pend):
        graphs += 1
        report = audit(g, config)
        for r in report.rows:
            scope = scope_of[r.bound_id]
            cell = (
                report.max_degree
                if scope == "maxdeg"
                else report.pendants if scope == "pend" else 0
            )
            st = agg.setdefault(
                (r.bound_id, r.param_label),
                {"iff": r.iff_sharp, "checks": 0, "viol": 0, "tight": 0,
                 "iffbad": 0, "cells": {}},
            )
            st["checks"] += 1
            st["viol"] += not r.satisfied
            st["tight"] += r.tight
            st["iffbad"] += not r.iff_consistent
            flags = st["cells"].setdefault(cell, [False, False])
            flags[0] = flags[0] or r.tight
            flags[1] = flags[1] or r.member
    rows = []
    for (bid, plabel), st in sorted(agg.items()):
        cells = st["cells"]
        attained = sum(1 for hit, _ in cells.values() if hit)
        members = sum(1 for _, present in cells.values() if present)
        stuck = sum(1 for hit, present in cells.values() if present and not hit)
        rows.append(
            (bid, plabel, st["iff"], st["checks"], st["viol"], st["tight"],
             st["iffbad"], len(cells), attained, members, stuck)
        )
    return n, graphs, rows


def _cmd_verify(args) -> int:
    lo, hi = _parse_range(args.range)
    tasks = [
        (n, args.max_degree, args.pendants, args.tolerance,
         tuple(args.alpha), tuple(args.a))
        for n in range(lo, hi + 1)
    ]
    if args.jobs is None or len(tasks) <= 1:
        results = [_verify_one_n(t) for t in tasks]
    else:
        jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            results = list(pool.map(_verify_one_n, tasks))

    tab = []
    total_graphs = total_checks = total_viol = total_sharp = 0
    for n, graphs, rows in results:
        checks = sum(r[3] for r in rows)
        viol = sum(r[4] for r in rows)
        sharp_issues = sum(r[6] + r[10] for r in rows)
        total_graphs += graphs
        total_checks += checks
        total_viol += viol
        total_sharp += sharp_issues
        if args.output == "tabular":
            for r in rows:
                tab.append((n,) + tuple("yes" if x is True else "no" if x is False else x for x in r))
            continue
        print(
            f"n={n}: {graphs} graphs, {checks} checks, {viol} violations, "
            f"{sharp_issues} sharpness issues"
        )
        for bid, plabel, iff, _, v, _, iffbad, cells, att, members, stuck in rows:
            param = f" {plabel}" if plabel else ""
            if v:
                print(f"  VIOLATION {bid}{param}: {v} graphs exceed the bound")
            if iffbad:
                print(f"  SHARPNESS {bid}{param}: tight<->family mismatch on {iffbad} graphs")
            if stuck:
                print(f"  SHARPNESS {bid}{param}: family present but bound unattained in {stuck} cells")
            if args.verbose and not (v or iffbad or stuck):
                kind = "iff" if iff else "attained"
                print(
                    f"  ok {bid}{param}: cells={cells} attained={att} "
                    f"family-cells={members} [{kind}]"
                )
    if args.output == "tabular":
        _emit_tabular(
            ("n", "bound_id", "param", "iff", "checks", "violations", "tight",
             "iff_breaks", "cells", "attained_cells", "member_cells", "stuck_cells"),
            tab,
        )
    failed = total_viol or total_sharp
    print(
        f"verify {lo}..{hi}: {total_graphs} graphs, {total_checks} checks, "
        f"{total_viol} violations, {total_sharp} sharpness issues -> "
        f"{'FAIL' if failed else 'ok'}"
    )
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args) -> int:
    shown = 0
    for g in enumerate_unicyclic(args.n, args.max_degree, args.pendants):
        shown += 1
        print(
            f"# class {shown}: degrees={degree_sequence(g)} "
            f"max_degree={max_degree(g)} pendants={pendant_count(g)} "
            f"code={canonical_code(g).hex()}"
        )
        sys.stdout.write(serialize_edge_list(g))
        print()
    print(f"{shown} classes on n={args.n}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# extremal-search


def _cmd_search(args) -> int:
    spec = parse_index(args.index)
    result = extremal_search(
        spec, args.n, args.max_degree, args.pendants, tol=args.tolerance
    )
    if args.output == "tabular":
        rows = []
        for side, value, graphs in (
            ("min", result.minimum, result.minimizers),
            ("max", result.maximum, result.maximizers),
        ):
            for g in graphs:
                rows.append(
                    (side, _fmt_value(value), canonical_code(g).hex(),
                     str(degree_sequence(g)))
                )
        _emit_tabular(("side", "value", "code", "degrees"), rows)
        return EXIT_OK
    filters = []
    if args.max_degree is not None:
        filters.append(f"max_degree={args.max_degree}")
    if args.pendants is not None:
        filters.append(f"pendants={args.pendants}")
    where = f" [{', '.join(filters)}]" if filters else ""
    if result.empty:
        print(f"{result.index_label} over n={args.n}{where}: empty class")
        return EXIT_OK
    print(f"{result.index_label} over n={args.n}{where}:")
    for side, value, graphs in (
        ("minimum", result.minimum, result.minimizers),
        ("maximum", result.maximum, result.maximizers),
    ):
        print(f"{side} = {_fmt_value(value)} ({value_mode(value)}), attained by {len(graphs)}:")
        for g in graphs:
            print(f"  code={canonical_code(g).hex()} degrees={degree_sequence(g)}")
            if args.show_edges:
                for u, v in g.sorted_edges():
                    print(f"    {u} {v}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct


def _parse_paths(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in _split_tokens(text))
    except ValueError:
        raise UsageError(f"bad path lengths {text!r}") from None


def _need(values: list[int], count: int, usage: str):
    if len(values) != count:
        raise UsageError(f"expected {usage}")


def _cmd_construct(args) -> int:
    fam = args.family.lower()
    vals = args.params
    paths = _parse_paths(args.paths) if args.paths else None
    if paths is not None and fam not in ("h", "hub-paths", "b", "hub-pendants"):
        raise UsageError("--paths only applies to hub-paths and hub-pendants")
    if args.cycle is not None and fam not in ("h", "hub-paths"):
        raise UsageError("--cycle only applies to hub-paths")
    if fam == "cycle":
        _need(vals, 1, "construct cycle N")
        g, family = build_cycle(vals[0]), Cycle(vals[0])
    elif fam in ("unthree", "triangle-star"):
        _need(vals, 1, f"construct {fam} N")
        g, family = build_triangle_star(vals[0]), TriangleStar(vals[0])
    elif fam in ("h", "hub-paths"):
        _need(vals, 2, f"construct {fam} N MAX_DEGREE")
        g = build_hub_paths(vals[0], vals[1], cycle_len=args.cycle, path_lengths=paths)
        family = HubPaths(vals[0], vals[1])
    elif fam in ("k", "loaded-cycle"):
        _need(vals, 2, f"construct {fam} N MAX_DEGREE")
        g, family = build_loaded_cycle(vals[0], vals[1]), LoadedCycle(vals[0], vals[1])
    elif fam in ("b", "hub-pendants"):
        _need(vals, 2, f"construct {fam} N PENDANTS")
        g = build_hub_pendants(vals[0], vals[1], path_lengths=paths)
        family = HubPendants(vals[0], vals[1])
    else:
        raise UsageError(
            f"unknown family {args.family!r}; choose from cycle, triangle-star "
            "(unthree), hub-paths (h), loaded-cycle (k), hub-pendants (b)"
        )
    print(f"# {family.label} {' '.join(str(v) for v in vals)}")
    print(f"# degrees={degree_sequence(g)} defining={family.defining_sequence}")
    sys.stdout.write(serialize_edge_list(g))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_grid_options(p):
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                   help="relative comparison tolerance (default 1e-9)")
    p.add_argument("--alpha", type=_csv_floats, default=DEFAULT_ALPHA_GRID,
                   metavar="LIST", help="comma separated exponent grid")
    p.add_argument("--a", type=_csv_floats, default=DEFAULT_A_GRID,
                   metavar="LIST", help="comma separated exponential-base grid")


def _add_filters(p):
    p.add_argument("--max-degree", type=int, default=None,
                   help="keep only graphs with this maximum degree")
    p.add_argument("--pendants", type=int, default=None,
                   help="keep only graphs with this many degree-1 vertices")


def _add_output(p):
    p.add_argument("--output", choices=("text", "tabular"), default="text",
                   help="text report or machine-readable CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="unicyc",
        description="Degree-based indices and sharp bounds on unicyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="evaluate indices on edge-list files")
    p.add_argument("files", nargs="+", metavar="FILE",
                   help="edge-list file, or - for stdin")
    p.add_argument("--indices", default=DEFAULT_INDICES,
                   help="index tokens: M1, F, ID, NK, NK*, W, M1^a, M2^a, SEI^a")
    _add_output(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("audit", help="check every applicable bound on a graph")
    p.add_argument("files", nargs="+", metavar="FILE",
                   help="edge-list file of a unicyclic graph, or -")
    _add_grid_options(p)
    _add_output(p)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("verify",
                       help="exhaustively audit all classes over a range of n")
    p.add_argument("range", metavar="N_RANGE", help="single n or LO..HI, e.g. 4..8")
    _add_filters(p)
    _add_grid_options(p)
    _add_output(p)
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers over n values; 0 means cpu count")
    p.add_argument("--verbose", action="store_true",
                   help="also print per-bound lines that passed")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate",
                       help="list unicyclic isomorphism classes as edge lists")
    p.add_argument("n", type=int)
    _add_filters(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("extremal-search",
                       help="brute-force optima of an index over all classes")
    p.add_argument("n", type=int)
    p.add_argument("--index", required=True, help="index token, e.g. M1^-2")
    _add_filters(p)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--show-edges", action="store_true",
                   help="print edge lists of the attaining graphs")
    _add_output(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("construct", help="build an extremal family representative")
    p.add_argument("family",
                   help="cycle | triangle-star (unthree) | hub-paths (h) | "
                        "loaded-cycle (k) | hub-pendants (b)")
    p.add_argument("params", nargs="*", type=int, metavar="N [ARG]")
    p.add_argument("--cycle", type=int, default=None,
                   help="cycle length for hub-paths")
    p.add_argument("--paths", default=None,
                   help="comma separated path lengths for hub-paths/hub-pendants")
    p.set_defaults(func=_cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        # ParseError is a ValueError; domain and input problems exit 2
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
