"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite finds a failure,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import chord, families, sequences, series, trees, verify
from .intersection import Multigraph, intersection_graph, tutte_2_neg1
from .young import EpsVector, Shape, check_pair, g_distribution

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_json(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_family_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=["crossing", "bipartite", "enk", "general"], required=required)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--shape", type=Shape.parse)
    p.add_argument("--eps", type=EpsVector.parse)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs " + ", ".join(f"--{n}" for n in missing))


def _build_from_args(args) -> chord.ChordDiagram:
    if args.family == "crossing":
        _need(args, "n")
        return families.build_crossing(args.n)
    if args.family == "bipartite":
        _need(args, "m", "n")
        return families.build_bipartite_crossing(args.m, args.n)
    if args.family == "enk":
        _need(args, "n", "k")
        return families.build_Enk(args.n, args.k)
    _need(args, "shape", "eps")
    return families.build_E(args.shape, args.eps)


def _diagram_input(args) -> chord.ChordDiagram:
    if getattr(args, "family", None):
        return _build_from_args(args)
    return chord.from_json(_read_json(args.input))


def cmd_build(args) -> int:
    _write(args, chord.dumps(_build_from_args(args)) + "\n")
    return EXIT_OK


def cmd_expand(args) -> int:
    d = _diagram_input(args)
    policy = chord.RandomPolicy(args.seed) if args.policy == "random" else chord.lex_first
    ms = chord.ncd(d, policy=policy, memo=args.policy == "lex")
    _write(args, json.dumps(chord.ncd_to_json(ms)) + "\n")
    if args.tree == "dot":
        if args.policy == "random":
            policy = chord.RandomPolicy(args.seed)
        dot = chord.expansion_tree_dot(d, policy)
        if args.tree_out:
            with open(args.tree_out, "w") as fh:
                fh.write(dot)
        else:
            sys.stdout.write(dot)
    return EXIT_OK


def cmd_ex(args) -> int:
    print(chord.ex(_diagram_input(args)))
    return EXIT_OK


def cmd_tutte(args) -> int:
    obj = _read_json(args.input)
    if args.from_diagram:
        g = intersection_graph(chord.from_json(obj))
    else:
        g = Multigraph.from_json(obj)
    print(tutte_2_neg1(g))
    return EXIT_OK


def _print_dist(args, dist: list[int]) -> None:
    if args.k is not None:
        print(dist[args.k] if 0 <= args.k < len(dist) else 0)
    else:
        print("k\tcount")
        for k, v in enumerate(dist):
            print(f"{k}\t{v}")


def cmd_f(args) -> int:
    s, e = check_pair(args.shape, args.eps)
    if args.method == "fast":
        dist = [families.f_fast(s, e, k) for k in range(s.width + 1)]
    else:
        dist = families.f_distribution(s, e)
    _print_dist(args, dist)
    return EXIT_OK


def cmd_g(args) -> int:
    s, e = check_pair(args.shape, args.eps)
    _print_dist(args, g_distribution(s, e))
    return EXIT_OK


_SUITE_BOUNDS = {
    "thm1": ("max_a1",),
    "cor6": ("max_a1",),
    "euler": ("max_n",),
    "entringer": ("max_n",),
    "tutte": ("chords", "samples", "seed", "family_chords"),
    "confluence": ("chords", "samples", "seed"),
    "repr": ("max_mn", "max_n"),
    "trees": ("max_order",),
    "gf": ("max_m", "max_n"),
}


def cmd_verify(args) -> int:
    kwargs = {name: getattr(args, name) for name in _SUITE_BOUNDS[args.suite] if getattr(args, name) is not None}
    report = verify.SUITES[args.suite](**kwargs)
    _write(args, json.dumps(report.to_json(), indent=2) + "\n")
    status = "ok" if report.ok else f"{len(report.failures)} failure(s)"
    print(f"{report.suite}: {report.checked} checks, {status}, {report.wall_time:.2f}s", file=sys.stderr)
    if args.suite == "gf":
        return EXIT_OK
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_sequences(args) -> int:
    if args.which == "euler":
        for n in range(args.max + 1):
            print(f"{n}\t{sequences.euler(n)}")
    else:
        if args.k is None:
            print("\t".join(str(sequences.entringer(args.n, k)) for k in range(args.n + 1)))
        else:
            print(sequences.entringer(args.n, args.k))
    return EXIT_OK


def cmd_series(args) -> int:
    rows = series.gf_table(args.max_m, args.max_n)
    if args.format == "tsv":
        _write(args, series.gf_table_tsv(rows))
    else:
        _write(args, json.dumps([r.to_json() for r in rows]) + "\n")
    return EXIT_OK


def cmd_trees(args) -> int:
    if args.map:
        _write(args, trees.map_json(args.order) + "\n")
    elif args.list:
        found = trees.enumerate_even_trees(args.order)
        _write(args, json.dumps([t.to_json() for t in found]) + "\n")
    else:
        print(len(trees.enumerate_even_trees(args.order)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordex", description="Chord expansion enumeration and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print a family diagram as JSON")
    _add_family_args(p, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("expand", help="full expansion multiset of a diagram")
    p.add_argument("input", nargs="?", help="diagram JSON file (default stdin)")
    _add_family_args(p, required=False)
    p.add_argument("--policy", choices=["lex", "random"], default="lex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tree", choices=["dot"])
    p.add_argument("--tree-out")
    p.add_argument("--out")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("ex", help="chord expansion number")
    p.add_argument("input", nargs="?")
    _add_family_args(p, required=False)
    p.set_defaults(func=cmd_ex)

    p = sub.add_parser("tutte", help="T(G; 2, -1) of a multigraph JSON")
    p.add_argument("input", nargs="?")
    p.add_argument("--from-diagram", action="store_true", help="input is a diagram; use its intersection graph")
    p.set_defaults(func=cmd_tutte)

    for name, func in (("f", cmd_f), ("g", cmd_g)):
        p = sub.add_parser(name, help=f"{name}(shape, eps, k)")
        p.add_argument("--shape", type=Shape.parse, required=True)
        p.add_argument("--eps", type=EpsVector.parse, required=True)
        p.add_argument("--k", type=int)
        if name == "f":
            p.add_argument("--method", choices=["expand", "fast"], default="expand")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    for flag in ("--max-a1", "--max-n", "--max-m", "--max-mn", "--max-order", "--chords",
                 "--samples", "--seed", "--family-chords"):
        p.add_argument(flag, type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequences", help="Euler and Entringer numbers")
    seq = p.add_subparsers(dest="which", required=True)
    q = seq.add_parser("euler")
    q.add_argument("--max", type=int, required=True)
    q = seq.add_parser("entringer")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int)
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("series", help="generating-function comparison table")
    ser = p.add_subparsers(dest="which", required=True)
    q = ser.add_parser("gf-table")
    q.add_argument("--max-m", type=int, required=True)
    q.add_argument("--max-n", type=int, required=True)
    q.add_argument("--format", choices=["json", "tsv"], default="json")
    q.add_argument("--out")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("trees", help="even increasing trees")
    p.add_argument("--order", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--map", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_trees)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"chordex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
