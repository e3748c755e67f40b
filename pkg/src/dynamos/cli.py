"""Command-line front end and the text file formats it speaks.

Graph files: a header line "n m" followed by exactly m lines "u v", one
directed edge u->v each, 0-based ids.  Lines starting with '#' and blank
lines are ignored.  Threshold files: one line "v t" per vertex.  Undirected
graph files use the same shape with unordered pairs.

Exit codes: 0 success, 1 parse or usage error, 2 semantic rejection (for
example a zero in-degree vertex handed to the half-bound solver).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import gadgets
from .activation import activate, is_dynamo
from .errors import (
    DynamosError,
    IsolatedVertexError,
    ParseError,
    TooLargeError,
    TwoCycleError,
    ZeroInDegreeError,
)
from .graphs import (
    DirectedGraph,
    Thresholds,
    UndirectedGraph,
    build_graph,
    build_undirected,
    check_thresholds,
    simple_majority,
    strict_majority,
)
from .oracle import DEFAULT_LIMIT, min_dynamo
from .ordering import Ordering, permutation_dynamo
from .solver import bounds_report, strict_majority_dynamo

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SEMANTIC = 2


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def _parse_header(lines: list[tuple[int, str]]) -> tuple[int, int]:
    if not lines:
        raise ParseError("missing header line 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must hold two integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", lineno)
    return n, m


def _parse_pairs(lines: list[tuple[int, str]], m: int) -> list[tuple[int, int, int]]:
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")
    pairs = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        pairs.append((lineno, u, v))
    return pairs


def parse_graph(text: str) -> DirectedGraph:
    lines = _content_lines(text)
    n, m = _parse_header(lines)
    pairs = _parse_pairs(lines, m)
    try:
        return build_graph(n, [(u, v) for _, u, v in pairs])
    except DynamosError as exc:
        raise ParseError(str(exc)) from exc


def parse_undirected(text: str) -> UndirectedGraph:
    lines = _content_lines(text)
    n, m = _parse_header(lines)
    pairs = _parse_pairs(lines, m)
    try:
        return build_undirected(n, [(u, v) for _, u, v in pairs])
    except DynamosError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: DirectedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_threshold_file(text: str, g: DirectedGraph) -> Thresholds:
    values: dict[int, int] = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("threshold line must be 'v t'", lineno)
        try:
            v, t = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("threshold line must hold two integers", lineno) from None
        if not 0 <= v < g.n:
            raise ParseError(f"vertex {v} out of range", lineno)
        if v in values:
            raise ParseError(f"vertex {v} assigned twice", lineno)
        if t < 1:
            raise ParseError("thresholds must be positive", lineno)
        values[v] = t
    if len(values) != g.n:
        raise ParseError(f"expected thresholds for all {g.n} vertices")
    return tuple(values[v] for v in range(g.n))


def resolve_thresholds(spec: str, g: DirectedGraph) -> Thresholds:
    """Resolve a threshold spec: strict | simple | const K | file PATH."""
    parts = spec.split()
    if parts == ["strict"]:
        return strict_majority(g)
    if parts == ["simple"]:
        return simple_majority(g)
    if len(parts) == 2 and parts[0] == "const":
        try:
            k = int(parts[1])
        except ValueError:
            raise ParseError(f"bad constant threshold {parts[1]!r}") from None
        return check_thresholds(g, tuple([k] * g.n))
    if len(parts) == 2 and parts[0] == "file":
        with open(parts[1], "r", encoding="utf-8") as fh:
            return parse_threshold_file(fh.read(), g)
    raise ParseError(f"bad threshold spec {spec!r}")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _print_trace(g, tau, seeds) -> None:
    trace = activate(g, tau, seeds)
    for i, layer in enumerate(trace.layers):
        print(f"layer {i}: " + " ".join(str(v) for v in sorted(layer)))


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.tau.split() == ["strict"]:
        seeds = strict_majority_dynamo(g)
        tau = strict_majority(g)
        bound = g.n // 2
    else:
        tau = resolve_thresholds(args.tau, g)
        print(
            "warning: non-strict thresholds use the permutation rule on the "
            "identity ordering; no size guarantee applies",
            file=sys.stderr,
        )
        seeds = permutation_dynamo(g, tau, Ordering.identity(g.n))
        bound = None
    ordered = sorted(seeds)
    print(f"dynamo {len(ordered)}: " + " ".join(str(v) for v in ordered))
    if bound is not None:
        print(f"bound {bound}")
    if args.trace:
        _print_trace(g, tau, seeds)
    print(f"verified {'true' if is_dynamo(g, tau, seeds) else 'false'}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = parse_graph(_read(args.graph))
    tau = resolve_thresholds(args.tau, g)
    result = min_dynamo(g, tau, limit=args.limit)
    assert result is not None
    size, witness = result
    print(f"min {size}: " + " ".join(str(v) for v in sorted(witness)))
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = parse_graph(_read(args.graph))
    tau = resolve_thresholds(args.tau, g)
    report = bounds_report(g, tau)
    print(f"upper {_frac(report.upper)}")
    print(f"lower {_frac(report.lower)}")
    print(f"epsilon {_frac(report.epsilon)}")
    print(f"t_bar {_frac(report.t_bar)}")
    print(f"t_max {report.t_max}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    tau = resolve_thresholds(args.tau, g)
    seeds = args.seed
    for v in seeds:
        if not 0 <= v < g.n:
            raise ParseError(f"seed vertex {v} out of range")
    ok = is_dynamo(g, tau, seeds)
    print(f"dynamo {'true' if ok else 'false'}")
    if args.trace:
        _print_trace(g, tau, seeds)
    return EXIT_OK


def cmd_gen(args) -> int:
    kind = args.kind
    params = args.params
    try:
        if kind == "k5" and not params:
            g = gadgets.two_regular_k5()
        elif kind == "gk" and len(params) == 1:
            g = gadgets.lower_bound_family(int(params[0]))
        elif kind == "bidi" and len(params) == 1:
            g = gadgets.bidirectional_complete(int(params[0]))
        elif kind == "random" and len(params) == 3:
            n, m, seed = (int(p) for p in params)
            g = gadgets.random_strongly_connected(n, m, seed)
        else:
            raise ValueError(f"bad generator arguments for {kind!r}")
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    sys.stdout.write(format_graph(g))
    return EXIT_OK


def cmd_reduce(args) -> int:
    gu = parse_undirected(_read(args.graph))
    if args.kind == "const2":
        h, tau = gadgets.reduce_constant_threshold(gu)
        sys.stdout.write(format_graph(h))
        print("# tau")
        for v, t in enumerate(tau):
            print(f"{v} {t}")
    else:
        h = gadgets.reduce_strict_majority(gu)
        sys.stdout.write(format_graph(h))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dynamos", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="strict-majority dynamo of size <= n/2")
    p.add_argument("graph")
    p.add_argument("--tau", default="strict", help="strict | simple | 'const K' | 'file PATH'")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("oracle", help="exact minimum dynamo by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--tau", default="strict")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("bounds", help="closed-form size bounds as exact rationals")
    p.add_argument("graph")
    p.add_argument("--tau", default="strict")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("verify", help="check whether a seed set is a dynamo")
    p.add_argument("graph")
    p.add_argument("--tau", default="strict")
    p.add_argument("--seed", type=int, nargs="+", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated graph file on stdout")
    p.add_argument("kind", choices=["k5", "gk", "bidi", "random"])
    p.add_argument("params", nargs="*")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("reduce", help="rewrite an undirected instance into a directed one")
    p.add_argument("kind", choices=["const2", "majority"])
    p.add_argument("graph")
    p.set_defaults(fn=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ZeroInDegreeError, TwoCycleError, TooLargeError, IsolatedVertexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    raise SystemExit(main())
