"""Command-line interface.

stdout carries data only; errors go to stderr as ``ErrorName: message``.
Exit status is 0 on success, 1 on a domain error or a failed ``verify``,
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import families, serialize
from .bounds import DEFAULT_TOL, bounds_report
from .digraph import DigraphError, format_edge_list, parse_edge_list
from .eigen import EigenError, eigenvalues
from .energy import IdentityMismatch, energy_report
from .matrices import ALIASES, BUILDERS, matrix_by_name
from .oracle import OrderTooLarge, RandomSpec, ViolationFound, sweep_bounds

DOMAIN_ERRORS = (
    DigraphError,
    EigenError,
    IdentityMismatch,
    OrderTooLarge,
    families.InvalidParameter,
    families.GenerationFailed,
)

GEN_USAGE = {
    "path": ("N",),
    "cycle": ("N",),
    "g1": ("N",),
    "g2": ("ALPHA", "BETA"),
    "rand": ("N", "P"),
    "tournament": ("N",),
    "balanced": ("N", "CYCLES"),
}


def _read_digraph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_edge_list(text)


def _matrix_name(value: str) -> str:
    key = value.strip().lower()
    key = ALIASES.get(key, key)
    if key not in BUILDERS:
        raise argparse.ArgumentTypeError(f"unknown matrix {value!r}; choose from {', '.join(BUILDERS)}")
    return key


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlap",
        description="Skew Laplacian matrices, spectra, energies and energy bounds of oriented graphs.",
        epilog="Digraphs are read as 1-indexed edge lists: a 'n m' header, then m lines 'u v' "
               "for arcs u->v. Lines starting with '#' are comments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="edge-list file (default: stdin)")

    matrix_help = "matrix name: " + ", ".join(BUILDERS) + " (aliases A+, A-, D+, D-, D~, L+)"

    p = sub.add_parser("matrix", help="print one of the integer matrices of a digraph")
    with_input(p)
    p.add_argument("--matrix", "-m", type=_matrix_name, default="slnew", help=matrix_help)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("spectrum", help="eigenvalues of one of the matrices")
    with_input(p)
    p.add_argument("--matrix", "-m", type=_matrix_name, default="slnew", help=matrix_help)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--zero-tol", type=float, default=None,
                   help="threshold for counting zero eigenvalues (default 1e-8 * max(1, ||M||_F))")

    p = sub.add_parser("energy", help="all eight energies plus M and M1")
    with_input(p)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--no-header", action="store_true", help="omit the CSV header row")

    p = sub.add_parser("bounds", help="evaluate every energy bound and classify equality")
    with_input(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative tightness tolerance")
    p.add_argument("--no-comparison", action="store_true", help="skip the LE_g and SLE_g bounds")

    p = sub.add_parser(
        "gen",
        help="emit a named digraph as an edge list",
        description="Families: " + "; ".join(f"{k} {' '.join(v)}" for k, v in GEN_USAGE.items()),
    )
    p.add_argument("family", choices=tuple(GEN_USAGE))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="exhaustive + random sweep of every identity and bound")
    p.add_argument("--exhaustive", type=int, default=4, metavar="N_MAX",
                   help="enumerate all oriented graphs with 1..N_MAX vertices (max 5, 0 to skip)")
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="number of random digraphs")
    p.add_argument("--n", type=int, default=8, help="order of the random digraphs")
    p.add_argument("--prob", type=float, default=0.5, help="arc probability of the random digraphs")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _generate(parser: argparse.ArgumentParser, args: argparse.Namespace):
    names = GEN_USAGE[args.family]
    if len(args.params) != len(names):
        parser.error(f"gen {args.family} expects {' '.join(names)}")
    try:
        if args.family == "rand":
            n, prob = int(args.params[0]), float(args.params[1])
        else:
            ints = [int(x) for x in args.params]
    except ValueError:
        parser.error(f"gen {args.family}: bad parameters {args.params}")
    if args.family == "rand":
        return families.random_oriented(n, prob, args.seed)
    if args.family == "path":
        return families.directed_path(*ints)
    if args.family == "cycle":
        return families.directed_cycle(*ints)
    if args.family == "g1":
        return families.oriented_complete_bipartite(*ints)
    if args.family == "g2":
        return families.triangles_plus_isolated(*ints)
    if args.family == "tournament":
        return families.random_tournament(ints[0], args.seed)
    return families.random_balanced(ints[0], ints[1], args.seed)


def run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    out = sys.stdout
    cmd = args.command
    if cmd == "gen":
        g = _generate(parser, args)
        seeded = " --seed %d" % args.seed if args.family in ("rand", "tournament", "balanced") else ""
        out.write(format_edge_list(g, f"gen {args.family} {' '.join(args.params)}{seeded}"))
        return 0
    if cmd == "verify":
        spec = RandomSpec(args.random, args.n, args.prob, args.seed) if args.random else None
        try:
            summary = sweep_bounds(args.exhaustive, spec, args.tol, workers=args.workers)
        except ViolationFound as exc:
            out.write(serialize.dumps(serialize.sweep_dict(exc.summary)))
            print(f"ViolationFound: {exc}", file=sys.stderr)
            return 1
        out.write(serialize.dumps(serialize.sweep_dict(summary)))
        return 0

    g = _read_digraph(args.input)
    if cmd == "matrix":
        m = matrix_by_name(g, args.matrix)
        if args.format == "json":
            out.write(serialize.dumps(serialize.matrix_dict(args.matrix, m)))
        else:
            out.write(serialize.matrix_table(m))
    elif cmd == "spectrum":
        s = eigenvalues(matrix_by_name(g, args.matrix), zero_tol=args.zero_tol)
        if args.format == "json":
            out.write(serialize.dumps(serialize.spectrum_dict(args.matrix, s)))
        else:
            out.write(serialize.spectrum_table(args.matrix, s))
    elif cmd == "energy":
        r = energy_report(g)
        if args.format == "json":
            out.write(serialize.dumps(serialize.energy_dict(r)))
        elif args.format == "csv":
            out.write(serialize.energy_csv(r, header=not args.no_header))
        else:
            out.write(serialize.energy_table(r))
    elif cmd == "bounds":
        r = bounds_report(g, args.tol, comparison=not args.no_comparison)
        if args.format == "json":
            out.write(serialize.dumps(serialize.bounds_dict(r)))
        else:
            out.write(serialize.bounds_table(r))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, parser)
    except DOMAIN_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
