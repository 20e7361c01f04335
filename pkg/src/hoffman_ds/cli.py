"""hoffman-ds: graph constructors, spectra, Hoffman graphs and the verification pipeline."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import families
from .graph import Graph
from .hoffman import HoffmanError, HoffmanGraph, decompose, factor_shape, special_matrix
from .io import FormatError, format_edge_list, parse_edge_list, to_dot
from .spectral import graph_spectrum, is_cospectral
from .verify import brute_force_ds_t1, verify_all
from .verify.pipeline import DEFAULT_SWEEP_MAX

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _need(args: argparse.Namespace, *names: str) -> List[int]:
    values = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--family {args.family} needs --{name}")
        values.append(v)
    return values


def build_family(args: argparse.Namespace) -> Graph:
    fam = args.family
    if fam == "grid":
        m, n = _need(args, "m", "n")
        return families.build_grid(m, n)
    if fam == "ext-grid":
        (t,) = _need(args, "t")
        q = args.q if args.q is not None else 2
        return families.build_clique_extension(families.build_grid(t + 1, t + 1), q)
    if fam == "coclique-ext-grid":
        (t,) = _need(args, "t")
        q = args.q if args.q is not None else 2
        return families.build_coclique_extension(families.build_grid(t + 1, t + 1), q)
    if fam == "cp":
        (n,) = _need(args, "n")
        return families.cocktail_party(n)
    (n,) = _need(args, "n")
    return families.cycle(n)


def _read(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = build_family(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_edge_list(g if args.labels else Graph(g.n, g.rows))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.dot:
        Path(args.dot).write_text(to_dot(g))
    deg = g.regular_degree()
    shape = f"{deg}-regular" if deg is not None else "not regular"
    print(f"{args.family}: {g.n} vertices, {len(g.edges())} edges, {shape}", file=sys.stderr)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    g, _ = _read(args.file)
    spec = graph_spectrum(g)
    if args.exact_json:
        print(json.dumps(spec.to_json(), indent=2))
    else:
        print(spec.format() if g.n else "(empty)")
    return EXIT_OK


def cmd_cospectral(args: argparse.Namespace) -> int:
    g, _ = _read(args.a)
    h, _ = _read(args.b)
    print(f"cospectral: {'true' if is_cospectral(g, h) else 'false'}")
    return EXIT_OK


def _hoffman(path: str) -> HoffmanGraph:
    g, fat = _read(path)
    if fat is None:
        raise UsageError(f"{path}: no 'fat:' line")
    try:
        return HoffmanGraph(g, fat)
    except HoffmanError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_hoffman(args: argparse.Namespace) -> int:
    h = _hoffman(args.file)
    if args.action == "special-matrix":
        print(" ".join(h.label(x) for x in h.slim_vertices))
        for row in special_matrix(h):
            print(" ".join(f"{v:3d}" for v in row))
        return EXIT_OK
    dec = decompose(h)
    print(f"{len(dec.factors)} factors")
    for i, f in enumerate(dec.factors, 1):
        slim = " ".join(h.label(x) for x in f.slim)
        fat = " ".join(f.hoffman.label(v) for v in f.hoffman.fat_vertices)
        print(f"factor {i} [{factor_shape(f.hoffman)}]: slim {slim} | fat {fat}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.t < 2:
        raise UsageError("--t must be at least 2")
    if args.sweep_max < 2:
        raise UsageError("--sweep-max must be at least 2")
    candidate, name = None, None
    if args.candidate:
        candidate, _ = _read(args.candidate)
        name = Path(args.candidate).name
    report = verify_all(args.t, candidate, args.sweep_max, name)
    sys.stdout.write(report.table(args.timings))
    if args.json:
        Path(args.json).write_text(report.dumps(args.timings))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    entry = brute_force_ds_t1()
    for row in entry.witness["candidates"]:
        cycles = "+".join(f"C{p}" for p in row["cycles"])
        print(f"complement of {cycles}: {'cospectral' if row['cospectral'] else 'not cospectral'}")
    print(entry.detail)
    return EXIT_OK if entry.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hoffman-ds", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a graph from a named family as an edge list")
    g.add_argument("--family", required=True, choices=["grid", "ext-grid", "coclique-ext-grid", "cp", "cycle"])
    for flag in ("t", "m", "n", "q"):
        g.add_argument(f"--{flag}", type=int)
    g.add_argument("--out", help="edge-list path (default: stdout)")
    g.add_argument("--dot", help="also write Graphviz DOT here")
    g.add_argument("--labels", action="store_true", help="append the vertex label section")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("spectrum", help="exact adjacency spectrum")
    s.add_argument("file")
    s.add_argument("--exact-json", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("cospectral", help="compare characteristic polynomials")
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_cospectral)

    h = sub.add_parser("hoffman", help="operations on a Hoffman graph file")
    h.add_argument("action", choices=["decompose", "special-matrix"])
    h.add_argument("file")
    h.set_defaults(func=cmd_hoffman)

    v = sub.add_parser("verify", help="run every check for one t")
    v.add_argument("--t", type=int, required=True)
    v.add_argument("--candidate", help="edge-list file (default: the 2-clique extension of the grid)")
    v.add_argument("--sweep-max", type=int, default=DEFAULT_SWEEP_MAX)
    v.add_argument("--json", help="write the JSON report here")
    v.add_argument("--timings", action="store_true", help="include per-entry milliseconds")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle-t1", help="exhaustive search at t = 1")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hoffman-ds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
