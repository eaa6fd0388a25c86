"""Command-line entry point: ``greedyfvs {solve,minimum,oracle,gen}``.

Exit status is 0 for YES (or success), 1 for NO, 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys

from .audit import AuditLog, verify_audit
from .branching import SearchStats, minimum_fvs, solve
from .graph import induces_forest
from .instance_file import InstanceFormatError, read_instance, write_instance
from .oracle import ORACLE_LIMIT, brute_force_min_fvs, gen_planted, gen_random_graph

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path):
    try:
        return read_instance(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    except InstanceFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _forbid_list(text, graph):
    if not text:
        return set()
    try:
        vs = {int(tok) for tok in text.split(",") if tok.strip()}
    except ValueError:
        raise UsageError(f"--forbid expects comma-separated vertex labels, got {text!r}") from None
    unknown = sorted(v for v in vs if v not in graph)
    if unknown:
        raise UsageError(f"--forbid names vertices not in the graph: {unknown}")
    if not induces_forest(graph, vs):
        raise UsageError("--forbid vertices must induce a forest")
    return vs


def _print_set(vertices, out):
    for v in sorted(vertices):
        print(v, file=out)


def cmd_solve(args, out):
    if args.k < 0:
        raise UsageError(f"budget must be nonnegative, got {args.k}")
    graph = _load(args.path)
    forbidden = _forbid_list(args.forbid, graph)
    stats = SearchStats()
    audit = AuditLog() if args.audit else None
    found = solve(graph, args.k, forbidden, cutoffs=not args.no_cutoff, stats=stats, audit=audit)
    if found is None:
        print("NO", file=out)
    else:
        print("YES", file=out)
        _print_set(found, out)
    if args.stats:
        print(f"nodes_visited={stats.nodes_visited}", file=out)
        print(f"max_path_length={stats.max_path_length}", file=out)
        print(f"cutoff_hits={stats.cutoff_hits}", file=out)
        f_prime = "" if stats.f_prime_on_success is None else stats.f_prime_on_success
        print(f"f_prime={f_prime}", file=out)
    if audit is not None:
        problems = verify_audit(audit)
        if problems:
            for p in problems:
                print(f"AUDIT VIOLATION {p}", file=out)
        else:
            print("AUDIT OK", file=out)
    return EXIT_NO if found is None else EXIT_YES


def cmd_minimum(args, out):
    graph = _load(args.path)
    best = minimum_fvs(graph)
    print(len(best), file=out)
    _print_set(best, out)
    return EXIT_YES


def cmd_oracle(args, out):
    graph = _load(args.path)
    if graph.n > ORACLE_LIMIT:
        raise UsageError(f"oracle is limited to {ORACLE_LIMIT} vertices, instance has {graph.n}")
    best = brute_force_min_fvs(graph)
    print(len(best), file=out)
    _print_set(best, out)
    return EXIT_YES


def cmd_gen(args, out):
    try:
        if args.kind == "random":
            graph = gen_random_graph(args.n, args.size, args.seed)
        else:
            graph = gen_planted(args.n, args.size, args.seed).graph
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    comment = f"{args.kind} n={args.n} {'m' if args.kind == 'random' else 'k'}={args.size} seed={args.seed}"
    write_instance(graph, args.out, comment)
    return EXIT_YES


def build_parser():
    parser = argparse.ArgumentParser(prog="greedyfvs", description="Exact feedback vertex set by greedy branching.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether a feedback vertex set of size <= k exists")
    p.add_argument("path")
    p.add_argument("k", type=int)
    p.add_argument("--stats", action="store_true", help="print search statistics")
    p.add_argument("--audit", action="store_true", help="verify the decrement bounds on the solution path")
    p.add_argument("--no-cutoff", action="store_true", help="do not cap the number of branching F moves")
    p.add_argument("--forbid", default="", help="comma-separated undeletable vertices (must induce a forest)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("minimum", help="print a minimum feedback vertex set")
    p.add_argument("path")
    p.set_defaults(func=cmd_minimum)

    p = sub.add_parser("oracle", help="brute-force minimum feedback vertex set")
    p.add_argument("path")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated instance file")
    p.add_argument("kind", choices=["random", "planted"])
    p.add_argument("n", type=int)
    p.add_argument("size", type=int, metavar="m-or-k", help="edge count (random) or planted set size (planted)")
    p.add_argument("seed", type=int)
    p.add_argument("out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"greedyfvs: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
