"""``ramsey-forge`` command line.

Exit status: 0 success, 1 a requested verification failed, 2 usage or
input error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import capacity, catalog, formats, products
from .config import CapExceededError, FormatError, PreconditionError, RamseyForgeError
from .model import ColoringSpec, validate_coloring
from .solvers import max_independent_set

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(RamseyForgeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _print_report(report):
    for cm in report.colors:
        k = report.spec.forbidden[cm.color - 1]
        status = "ok" if cm.clique_size < k else "FAIL"
        print(f"color {cm.color}: max clique {cm.clique_size} (forbidden {k}) {status} witness {list(cm.witness)}")
    print("verdict", "pass" if report.passed else "fail")


def cmd_verify(args):
    c = formats.read_coloring(args.coloring)
    spec = ColoringSpec.parse(args.spec)
    report = validate_coloring(c, spec, threads=args.threads)
    _print_report(report)
    if args.cert:
        claim = f"coloring in R({spec};{c.vertex_count})" if report.passed else f"coloring not in R({spec};{c.vertex_count})"
        formats.write_certificate(formats.coloring_certificate(c, report, claim, [f"input {args.coloring}"]), args.cert)
    return EXIT_OK if report.passed else EXIT_FAIL


def _construct_theorem2(args):
    g = formats.read_coloring(args.g)
    h = formats.read_coloring(args.h)
    m = args.m
    if args.normalize:
        nb = capacity.majority_neighborhood(g)
        if m is None:
            m = len(nb.members)
        elif m > len(nb.members):
            raise PreconditionError(f"--m {m} exceeds the largest monochromatic neighborhood ({len(nb.members)})")
        g = capacity.normalize_for_doubling(g, nb)
        print(f"normalized: vertex {nb.vertex}, color {nb.color}, neighborhood {list(nb.members)}")
    if m is None:
        raise UsageError("theorem2 needs --m (or --normalize)")
    F = products.theorem2_construct(g, m, h, args.k)
    _emit(formats.format_coloring(F), args.out)
    n = g.color_count
    report = validate_coloring(F, ColoringSpec.diagonal(args.k, 2 * n), threads=args.threads)
    bound = capacity.bound_report(g.vertex_count, m, h.vertex_count, n, args.k)
    _print_report(report)
    if not report.passed:
        print("construction does NOT certify", bound.claim)
        return EXIT_FAIL
    print(f"{F.vertex_count} vertices, {F.color_count} colors; certifies {bound.claim}")
    if args.cert:
        provenance = [f"g {args.g}", f"h {args.h}", f"m {m}"]
        formats.write_certificate(formats.bound_certificate(F, report, bound, provenance), args.cert)
    return EXIT_OK


def cmd_construct(args):
    kind = args.kind
    if kind == "theorem2":
        for flag in ("g", "h", "k"):
            if getattr(args, flag) is None:
                raise UsageError(f"theorem2 needs --{flag}")
        return _construct_theorem2(args)
    if kind in ("strong-product", "composition") and args.graph and args.graph2:
        g1, g2 = formats.read_graph(args.graph), formats.read_graph(args.graph2)
        op = products.strong_product if kind == "strong-product" else products.composition_graph
        result = op(g1, g2)
        _emit(formats.format_graph(result), args.out)
    elif kind == "composition" and args.g and args.h:
        result = products.composition_coloring(formats.read_coloring(args.g), formats.read_coloring(args.h))
        _emit(formats.format_coloring(result), args.out)
    elif kind == "power" and args.graph and args.n is not None:
        result = products.graph_power(formats.read_graph(args.graph), args.n)
        _emit(formats.format_graph(result), args.out)
    elif kind == "emt" and args.g:
        graphs = products.emt_product_graphs(formats.read_coloring(args.g))
        if args.out in (None, "-"):
            for i, g in enumerate(graphs, start=1):
                print(f"# graph {i}")
                sys.stdout.write(formats.format_graph(g))
        else:
            for i, g in enumerate(graphs, start=1):
                formats.write_graph(g, f"{args.out}.{i}.g")
        result = graphs[0]
    else:
        raise UsageError(f"missing inputs for construct {kind}")
    if args.out not in (None, "-"):
        print(f"wrote {args.out} ({result.vertex_count} vertices)")
    return EXIT_OK


def cmd_alpha(args):
    g = formats.read_graph(args.graph)
    result = max_independent_set(g)
    print("alpha", result.size)
    print("witness", " ".join(map(str, result.witness)))
    if args.cert:
        formats.write_certificate(formats.alpha_certificate(g, result.size, result.witness, [f"input {args.graph}"]), args.cert)
    return EXIT_OK


def cmd_capacity(args):
    g = formats.read_graph(args.graph)
    bound = capacity.capacity_lower_bound(g, args.max_power, graph_id=args.graph)
    print("n alpha root")
    for row in bound.rows:
        print(f"{row.power} {row.alpha} {row.root:.12f}")
    if bound.rows:
        print(f"best {bound.best:.12f}")
    if bound.truncated_at is not None:
        print(f"truncated at power {bound.truncated_at}: {bound.truncation_reason}")
        return EXIT_CAP
    return EXIT_OK


def cmd_bound(args):
    if args.corollary:
        r_n, r_prev, n = args.corollary
        m, value = capacity.corollary_bound(r_n, r_prev, n)
        print(f"m={m} bound={value}")
        print(f"R_{2 * n}(3) >= {value} given R_{n}(3) = {r_n}, R_{n - 1}(3) = {r_prev} (caller-supplied)")
    else:
        s, m, t = args.theorem2
        print(f"bound={capacity.theorem2_bound(s, m, t)}")
    return EXIT_OK


def cmd_catalog(args):
    if args.name == "cycle":
        if args.n is None:
            raise UsageError("catalog cycle needs --n")
        _emit(formats.format_graph(catalog.generate_cycle(args.n)), args.out)
    else:
        _emit(formats.format_coloring(catalog.CATALOG[args.name]()), args.out)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="ramsey-forge", description="Ramsey colorings, graph products and capacity bounds.")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for per-color verification")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check a coloring against forbidden clique sizes")
    p.add_argument("coloring")
    p.add_argument("--spec", required=True, help="comma-separated forbidden sizes, e.g. 3,3")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a product or the doubling construction")
    p.add_argument("kind", choices=["strong-product", "power", "composition", "theorem2", "emt"])
    p.add_argument("--graph")
    p.add_argument("--graph2")
    p.add_argument("--g", help="coloring file (theorem2 base, composition outer, emt input)")
    p.add_argument("--h", help="coloring file (theorem2 block, composition inner)")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--normalize", action="store_true", help="theorem2: move the largest monochromatic neighborhood first as color 1")
    p.add_argument("--out", "-o")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("alpha", help="exact independence number")
    p.add_argument("graph")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("capacity", help="alpha(G^n)^(1/n) for n = 1..max-power")
    p.add_argument("graph")
    p.add_argument("--max-power", type=int, required=True)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("bound", help="Ramsey lower-bound arithmetic")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--corollary", type=int, nargs=3, metavar=("R_N", "R_N_MINUS_1", "N"))
    group.add_argument("--theorem2", type=int, nargs=3, metavar=("S", "M", "T"))
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("catalog", help="emit a catalog object")
    p.add_argument("name", choices=["k5", "gf16", "cycle"])
    p.add_argument("--n", type=int)
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, PreconditionError, FormatError, RamseyForgeError, OSError) as exc:
        witness = getattr(exc, "witness", None)
        print(f"error: {exc}", file=sys.stderr)
        if witness is not None:
            print(f"witness: {witness}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
