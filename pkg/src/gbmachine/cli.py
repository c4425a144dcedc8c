"""Command-line interface.

Subcommands: reduce, gb, member, congruent, bench, corpus.  Exit codes:
0 on success, 1 on domain errors (bad input data, non-admissible
ordering, ...), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .bench import BenchConfig, run_bench
from .corpus import corpus, problem
from .engines import ENGINE_NAMES, get_engine
from .groebner import MODES, buchberger, congruent, ideal_member
from .machine import run_cached_machine, run_machine
from .ordering import OrderKind, Ordering
from .reduction import Basis, classic_reduce, default_strategies
from .text import (
    format_basis,
    format_machine_trace,
    format_polynomial,
    format_reduction_graph,
    parse_polynomial,
    read_problem_file,
)


def _ordering_arg(parser):
    parser.add_argument(
        "--order",
        default="grlex",
        help="monomial ordering: lex, revlex, grlex, grevlex (default grlex)",
    )


def _engine_arg(parser):
    parser.add_argument(
        "--engine",
        default="classic",
        choices=ENGINE_NAMES,
        help="normal-form engine (default classic)",
    )


def _strategy_arg(parser):
    parser.add_argument(
        "--strategy",
        default="first",
        choices=sorted(default_strategies()),
        help="reducer selection strategy (default first)",
    )


def _basis_source(parser, required=True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--basis", metavar="FILE", help="problem file with the basis")
    group.add_argument(
        "--problem", type=int, metavar="N", help="corpus problem id (1-20)"
    )


def _load_basis(args):
    if getattr(args, "problem", None) is not None:
        spec = problem(args.problem)
        return spec.ring(), spec.polynomials()
    return read_problem_file(args.basis)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbmachine",
        description="Polynomial reduction machines and Groebner bases",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce a polynomial modulo a basis")
    p.add_argument("polynomial", help="polynomial to reduce, e.g. 'x^3 + 2*y'")
    _basis_source(p)
    _ordering_arg(p)
    _strategy_arg(p)
    _engine_arg(p)
    p.add_argument("--trace", action="store_true", help="print the engine trace")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gb", help="compute a Groebner basis")
    _basis_source(p)
    _ordering_arg(p)
    _strategy_arg(p)
    _engine_arg(p)
    p.add_argument("--mode", default="improved", choices=MODES)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("member", help="test ideal membership")
    p.add_argument("polynomial")
    _basis_source(p)
    _ordering_arg(p)
    _engine_arg(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("congruent", help="test congruence modulo the ideal")
    p.add_argument("left")
    p.add_argument("right")
    _basis_source(p)
    _ordering_arg(p)
    _engine_arg(p)
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser("bench", help="benchmark the engines on the corpus")
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--warmup", type=int, default=1)
    p.add_argument("--out", default="bench.csv", help="CSV output path")
    _ordering_arg(p)
    p.add_argument(
        "--engines",
        default="classic,machine,cached",
        help="comma-separated engine list (default classic,machine,cached)",
    )
    p.add_argument(
        "--problems",
        default=None,
        help="comma-separated problem ids (default: all 20)",
    )
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("corpus", help="inspect the problem corpus")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("id", nargs="?", type=int)
    p.set_defaults(func=cmd_corpus)

    return parser


def cmd_reduce(args) -> int:
    ring, generators = _load_basis(args)
    ordering = Ordering(OrderKind.from_name(args.order), ring)
    basis = Basis(generators, ordering)
    g = parse_polynomial(args.polynomial, ring)
    if args.engine == "machine":
        trace = run_machine(g, basis, args.strategy)
        result = trace.result
        if args.trace:
            print(format_machine_trace(trace, ordering))
    elif args.engine == "cached":
        result, graph = run_cached_machine(g, basis, args.strategy)
        if args.trace:
            print(format_reduction_graph(graph, ordering))
            print(f"expansions: {graph.expansions}")
    elif args.engine == "classic":
        result, steps = classic_reduce(g, basis, args.strategy)
        if args.trace:
            print(f"steps: {steps}")
    else:
        result = get_engine(args.engine)(g, basis, args.strategy).normal_form
    print(format_polynomial(result, ordering))
    return 0


def cmd_gb(args) -> int:
    ring, generators = _load_basis(args)
    ordering = Ordering(OrderKind.from_name(args.order), ring)
    result = buchberger(
        generators,
        ordering,
        mode=args.mode,
        engine=args.engine,
        strategy=args.strategy,
    )
    print(format_basis(list(result.basis), ordering))
    return 0


def cmd_member(args) -> int:
    ring, generators = _load_basis(args)
    ordering = Ordering(OrderKind.from_name(args.order), ring)
    g = parse_polynomial(args.polynomial, ring)
    print("true" if ideal_member(g, generators, ordering, engine=args.engine) else "false")
    return 0


def cmd_congruent(args) -> int:
    ring, generators = _load_basis(args)
    ordering = Ordering(OrderKind.from_name(args.order), ring)
    g = parse_polynomial(args.left, ring)
    h = parse_polynomial(args.right, ring)
    print("true" if congruent(g, h, generators, ordering, engine=args.engine) else "false")
    return 0


def cmd_bench(args) -> int:
    runs = args.runs
    env_runs = os.environ.get("BENCH_RUNS")
    if env_runs is not None:
        runs = int(env_runs)
    problems = None
    if args.problems:
        problems = [int(x) for x in args.problems.split(",") if x.strip()]
    config = BenchConfig(
        runs=runs,
        warmup=args.warmup,
        ordering=OrderKind.from_name(args.order),
        engines=[e.strip() for e in args.engines.split(",") if e.strip()],
        output=args.out,
        problems=problems,
    )
    report = run_bench(config)
    with open(config.output, "w", encoding="utf-8") as fh:
        fh.write(report.to_csv())
    print(report.to_table())
    print(f"\nwrote {config.output}")
    return 0


def cmd_corpus(args) -> int:
    if args.action == "list":
        for spec in corpus():
            vars_ = ",".join(spec.variables)
            gens = " ; ".join(spec.generators)
            tag = f" {spec.source}" if spec.source else ""
            print(f"{spec.id:2d}{tag:>10}  vars={vars_}: {gens}")
        return 0
    if args.id is None:
        raise ValueError("corpus show needs a problem id")
    spec = problem(args.id)
    print(f"problem {spec.id} {spec.source}".rstrip())
    print(f"vars: {','.join(spec.variables)}")
    for gen in spec.generators:
        print(gen)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
