"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 decomposition error, 4 budget or
cap exceeded.  Answers go to stdout in a fixed line format; ``--stats``
writes timing and table sizes to stderr so stdout stays byte-identical
across runs.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .decomposition import (
    DecompositionError,
    interval_caterpillar_decomposition,
    linear_order_decomposition,
    mim_width,
    optimal_decomposition_bruteforce,
)
from .formats import (
    FormatError,
    format_decomposition,
    parse_decomposition,
    parse_graph,
    parse_intervals,
    parse_pairs,
)
from .graph import Graph, bits
from .hitm import DEFAULT_MAX_PATTERN_EDGES, PatternTooLarge, hitm_solve
from .idp import idp_solve
from .lip import lip_solve
from .oracle import BudgetExceeded, hitm_bruteforce, idp_bruteforce, lip_bruteforce

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DECOMP = 3
EXIT_BUDGET = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunReport:
    problem: str
    answer: object = None
    witness: list = field(default_factory=list)
    width: int | None = None
    table_sizes: dict = field(default_factory=dict)
    seconds: float = 0.0
    lines: list[str] = field(default_factory=list)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _decomposition(path: str | None, g: Graph):
    if path is None:
        if g.n < 2:
            return None
        return linear_order_decomposition(g, list(range(g.n)))
    return parse_decomposition(_read(path), g.n)


def _one_based(vertices) -> str:
    return " ".join(str(v + 1) for v in vertices)


def cmd_lip(graph_path: str, decomp_path: str | None, witness_flag: bool = False) -> RunReport:
    g = _graph(graph_path)
    d = _decomposition(decomp_path, g)
    res = lip_solve(g, d, witness=witness_flag, stats=True)
    report = RunReport("lip", res.length, res.path or [], res.width, res.table_sizes, res.seconds)
    report.lines.append(f"lip {res.length}")
    if witness_flag:
        report.lines.append(f"path {_one_based(res.path)}".rstrip())
    return report


def cmd_idp(graph_path: str, decomp_path: str | None, pairs_path: str,
            witness_flag: bool = False) -> RunReport:
    g = _graph(graph_path)
    pairs = parse_pairs(_read(pairs_path), g.n)
    d = _decomposition(decomp_path, g)
    res = idp_solve(g, d, pairs, witness=witness_flag, stats=True)
    report = RunReport("idp", res.feasible, res.paths or [], res.width, res.table_sizes, res.seconds)
    report.lines.append(f"idp {'yes' if res.feasible else 'no'}")
    if witness_flag and res.feasible:
        for i, p in enumerate(res.paths, start=1):
            report.lines.append(f"path {i} {_one_based(p)}")
    return report


def cmd_hitm(graph_path: str, decomp_path: str | None, pattern_path: str,
             max_pattern_edges: int = DEFAULT_MAX_PATTERN_EDGES,
             witness_flag: bool = False) -> RunReport:
    g = _graph(graph_path)
    h = _graph(pattern_path)
    if h.m > max_pattern_edges:
        raise CliError(EXIT_INPUT, f"pattern has {h.m} edges, above the cap of {max_pattern_edges}"
                                   " (raise it with --max-pattern-edges)")
    d = _decomposition(decomp_path, g)
    start = time.perf_counter()
    res = hitm_solve(g, d, h, witness=True, max_edges=max_pattern_edges)
    report = RunReport("hitm", res.found, res.vertices or [], seconds=time.perf_counter() - start)
    report.lines.append(f"hitm {'yes' if res.found else 'no'}")
    if witness_flag and res.found:
        report.lines.append(f"branch {_one_based(res.assignment.branch_map)}".rstrip()
                            if res.assignment else "branch")
        report.lines.append(f"vertices {_one_based(res.vertices)}".rstrip())
    report.table_sizes = {"assignments": res.assignments_tried, "idp_calls": res.idp_calls}
    return report


def cmd_decomp(graph_path: str, strategy: str, order: str | None = None,
               intervals_path: str | None = None, max_vertices: int = 8) -> str:
    g = _graph(graph_path)
    if g.n < 2:
        raise CliError(EXIT_INPUT, "a graph needs at least two vertices to have a branch decomposition")
    if strategy == "linear-order":
        if order is None:
            perm = list(range(g.n))
        else:
            try:
                perm = [int(tok) - 1 for tok in order.replace(",", " ").split()]
            except ValueError:
                raise CliError(EXIT_INPUT, "--order must list vertex ids") from None
            if sorted(perm) != list(range(g.n)):
                raise CliError(EXIT_INPUT, "--order must be a permutation of 1..n")
        d = linear_order_decomposition(g, perm)
    elif strategy == "interval":
        if intervals_path is None:
            raise CliError(EXIT_INPUT, "the interval strategy needs --intervals")
        intervals = parse_intervals(_read(intervals_path))
        if len(intervals) != g.n:
            raise CliError(EXIT_INPUT, f"{len(intervals)} intervals given for {g.n} vertices")
        ig, d = interval_caterpillar_decomposition(intervals)
        if ig != g:
            raise CliError(EXIT_INPUT, "the graph is not the intersection graph of the given intervals")
    elif strategy == "exhaustive":
        if g.n > max_vertices:
            raise CliError(EXIT_BUDGET, f"exhaustive search is capped at {max_vertices} vertices"
                                        " (raise it with --max-vertices)")
        d = optimal_decomposition_bruteforce(g, max_vertices=max_vertices)
    else:
        raise CliError(EXIT_INPUT, f"unknown strategy {strategy!r}")
    return format_decomposition(d)


def cmd_check_decomp(graph_path: str, decomp_path: str) -> RunReport:
    g = _graph(graph_path)
    d = parse_decomposition(_read(decomp_path), g.n)
    cert = mim_width(g, d)
    report = RunReport("check-decomp", cert.width, width=cert.width)
    report.lines.append(f"width {cert.width}")
    rows = sorted((sorted(bits(d.vmask[t])), value) for (_, t), value in cert.per_edge_mim.items())
    for below, value in rows:
        report.lines.append(f"edge {','.join(str(v + 1) for v in below)} mim {value}")
    return report


def cmd_oracle(problem: str, graph_path: str, pairs_path: str | None = None,
               pattern_path: str | None = None) -> RunReport:
    g = _graph(graph_path)
    report = RunReport(f"oracle-{problem}")
    if problem == "lip":
        report.answer = lip_bruteforce(g)
        report.lines.append(f"lip {report.answer}")
    elif problem == "idp":
        if pairs_path is None:
            raise CliError(EXIT_INPUT, "oracle idp needs --pairs")
        report.answer = idp_bruteforce(g, parse_pairs(_read(pairs_path), g.n))
        report.lines.append(f"idp {'yes' if report.answer else 'no'}")
    else:
        if pattern_path is None:
            raise CliError(EXIT_INPUT, "oracle hitm needs --pattern")
        report.answer = hitm_bruteforce(g, _graph(pattern_path))
        report.lines.append(f"hitm {'yes' if report.answer else 'no'}")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mimpaths",
        description="Induced path problems solved over branch decompositions of bounded mim-width.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, decomp=True):
        p.add_argument("-g", "--graph", required=True, help="graph file ('p n m' / 'e u v', 1-based)")
        if decomp:
            p.add_argument("-d", "--decomp", help="decomposition file; default: caterpillar in vertex order")
        p.add_argument("--stats", action="store_true", help="write width, table sizes and time to stderr")

    p = sub.add_parser("lip", help="longest induced path")
    common(p)
    p.add_argument("--witness", action="store_true", help="also print one longest induced path")

    p = sub.add_parser("idp", help="induced disjoint paths")
    common(p)
    p.add_argument("--pairs", required=True, help="terminal pairs file, one 'x y' per line")
    p.add_argument("--witness", action="store_true", help="also print the paths")

    p = sub.add_parser("hitm", help="induced topological minor")
    common(p)
    p.add_argument("--pattern", required=True, help="pattern graph file")
    p.add_argument("--max-pattern-edges", type=int, default=DEFAULT_MAX_PATTERN_EDGES)
    p.add_argument("--witness", action="store_true", help="also print branch and subdivision vertices")

    p = sub.add_parser("decomp", help="build a branch decomposition")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--strategy", choices=["interval", "linear-order", "exhaustive"], required=True)
    p.add_argument("--order", help="vertex order for linear-order, e.g. '3 1 2'")
    p.add_argument("--intervals", help="intervals file for the interval strategy")
    p.add_argument("--max-vertices", type=int, default=8, help="size cap for exhaustive search")
    p.add_argument("-o", "--output", help="write the decomposition here instead of stdout")

    p = sub.add_parser("check-decomp", help="validate a decomposition and report its mim-width")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-d", "--decomp", required=True)

    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("problem", choices=["lip", "idp", "hitm"])
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--pairs")
    p.add_argument("--pattern")
    return parser


def _emit_stats(report: RunReport) -> None:
    err = sys.stderr
    if report.width is not None:
        print(f"stats width {report.width}", file=err)
    for key, value in sorted(report.table_sizes.items(), key=lambda kv: str(kv[0])):
        print(f"stats entries {key} {value}", file=err)
    print(f"stats seconds {report.seconds:.3f}", file=err)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decomp":
            text = cmd_decomp(args.graph, args.strategy, args.order, args.intervals, args.max_vertices)
            if args.output:
                Path(args.output).write_text(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.command == "lip":
            report = cmd_lip(args.graph, args.decomp, args.witness)
        elif args.command == "idp":
            report = cmd_idp(args.graph, args.decomp, args.pairs, args.witness)
        elif args.command == "hitm":
            report = cmd_hitm(args.graph, args.decomp, args.pattern, args.max_pattern_edges, args.witness)
        elif args.command == "check-decomp":
            report = cmd_check_decomp(args.graph, args.decomp)
        else:
            report = cmd_oracle(args.problem, args.graph, args.pairs, args.pattern)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DecompositionError as exc:
        print(f"decomposition error: {exc}", file=sys.stderr)
        return EXIT_DECOMP
    except (BudgetExceeded, PatternTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET if isinstance(exc, BudgetExceeded) else EXIT_INPUT
    except (FormatError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for line in report.lines:
        print(line)
    if getattr(args, "stats", False):
        _emit_stats(report)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
