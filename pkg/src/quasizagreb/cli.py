"""Command-line interface.

Exit codes: 0 success, 2 bad parameters, 3 graph6 parse error, 4 precondition
failure (e.g. disconnected input), 5 bound violation, 6 expectation mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from contextlib import contextmanager

from quasizagreb import families as fam
from quasizagreb.bounds import Variant, bound_sweep
from quasizagreb.graph import GraphError, is_connected
from quasizagreb.graph6 import Graph6Error, read_graph6_lines, to_graph6
from quasizagreb.invariants import index_pair
from quasizagreb.quasi import min_deletion_to_kcyclic
from quasizagreb.search import (
    MAX_ENUM_ORDER,
    corollary_min_order,
    enumerate_connected,
    enumerate_kcyclic,
    enumerate_quasi_class,
    extremal_search,
    verify_uniqueness,
)

log = logging.getLogger("quasizagreb")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_VIOLATION = 5
EXIT_MISMATCH = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _usage(message: str) -> CliError:
    return CliError(EXIT_USAGE, message)


# -- argument helpers ----------------------------------------------------------


def _add_npk(parser, names=("n", "p", "k"), required=("n", "p", "k")):
    for name in names:
        parser.add_argument(f"{name}_pos", nargs="?", type=int, metavar=name.upper())
        parser.add_argument(f"--{name}", type=int, dest=name)


def _resolve(args, name, required=True, default=None):
    flag = getattr(args, name, None)
    pos = getattr(args, f"{name}_pos", None)
    if flag is not None and pos is not None and flag != pos:
        raise _usage(f"conflicting values for {name}: {pos} and --{name} {flag}")
    value = flag if flag is not None else pos
    if value is None:
        if required:
            raise _usage(f"missing required parameter {name}")
        return default
    return value


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


@contextmanager
def _input(path):
    if path is None or path == "-":
        yield sys.stdin
    else:
        try:
            fh = open(path, encoding="utf-8")
        except OSError as exc:
            raise _usage(f"cannot read {path}: {exc}") from None
        with fh:
            yield fh


def _read_graphs(path):
    """All (line_number, graph) pairs; a malformed line aborts with exit 3."""
    with _input(path) as fh:
        try:
            return list(read_graph6_lines(fh))
        except Graph6Error as exc:
            raise CliError(EXIT_PARSE, str(exc)) from None


def _write_table(rows, fieldnames, fmt, out):
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    else:
        raise _usage(f"format {fmt} is not available for this subcommand")


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(str(v) for v in value)
    return value


def _variant(text):
    try:
        return Variant(text.replace("-", "_"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown variant {text!r}") from None


# -- subcommands ---------------------------------------------------------------


def cmd_construct(args):
    name = args.family or args.family_pos
    n = _resolve(args, "n")
    if name is None:
        raise _usage("missing family")
    if args.join_p < 0:
        raise _usage("--join-p must be nonnegative")
    try:
        g = fam.join_with_complete(fam.family(name, n), args.join_p)
    except GraphError as exc:
        raise _usage(str(exc)) from None
    text = to_graph6(g)
    with _output(args.out) as out:
        if args.format == "graph6":
            out.write(text + "\n")
        else:
            _write_table([{"family": name, "n": n, "join_p": args.join_p, "graph6": text}],
                         ["family", "n", "join_p", "graph6"], args.format, out)
    return EXIT_OK


def cmd_invariants(args):
    rows = []
    for _, g in _read_graphs(args.input or args.input_pos):
        connected = is_connected(g)
        ip = index_pair(g)
        rows.append({
            "graph6": to_graph6(g),
            "n": g.order,
            "m": g.size,
            "m1": ip.m1,
            "m2": ip.m2,
            "cyclomatic": g.size - g.order + 1 if connected else None,
            "connected": connected,
        })
    with _output(args.out) as out:
        _write_table(rows, ["graph6", "n", "m", "m1", "m2", "cyclomatic", "connected"],
                     "json" if args.format == "graph6" else args.format, out)
    return EXIT_OK


def cmd_classify(args):
    k = _resolve(args, "k")
    if k < 0:
        raise _usage("k must be nonnegative")
    graphs = _read_graphs(args.input)
    bad = [lineno for lineno, g in graphs if not is_connected(g)]
    if bad:
        raise CliError(EXIT_PRECONDITION, "disconnected input on line(s): " + ", ".join(map(str, bad)))
    rows = []
    for _, g in graphs:
        c = min_deletion_to_kcyclic(g, k)
        rows.append({
            "graph6": to_graph6(g),
            "p": c.p if c.p is not None else (-1 if args.format == "csv" else None),
            "witness_count": len(c.witnesses),
            "example_witness": sorted(c.witnesses[0]) if c.witnesses else None,
        })
    with _output(args.out) as out:
        _write_table(rows, ["graph6", "p", "witness_count", "example_witness"],
                     "json" if args.format == "graph6" else args.format, out)
    return EXIT_OK


def cmd_verify_bound(args):
    p = _resolve(args, "p")
    k = _resolve(args, "k")
    if p < 0 or k < 0:
        raise _usage("p and k must be nonnegative")
    source = args.source
    if args.input is not None:
        source = args.input
    if source == "enumerate":
        n = _resolve(args, "n")
        if not 1 <= n <= MAX_ENUM_ORDER:
            raise _usage(f"n must be in 1..{MAX_ENUM_ORDER}")
        graphs = enumerate_connected(n, workers=args.workers)
    else:
        graphs = [g for _, g in _read_graphs(source)]
        n = _resolve(args, "n", required=False)
        if n is not None:
            graphs = [g for g in graphs if g.order == n]
        bad = [i for i, g in enumerate(graphs, 1) if not is_connected(g)]
        if bad:
            raise CliError(EXIT_PRECONDITION, "disconnected input graph(s) at position(s): " + ", ".join(map(str, bad)))
    verdict = bound_sweep(graphs, p, k, args.variant)
    with _output(args.out) as out:
        if args.format == "csv":
            _write_table([{
                "checked": verdict["checked"],
                "violations": [f"{v['graph6']}:{v['index']}:{v['realized']}>{v['bound']}" for v in verdict["violations"]],
                "tight": verdict["tight"],
                "equality_exceptions": [e["graph6"] for e in verdict["equality_exceptions"]],
            }], ["checked", "violations", "tight", "equality_exceptions"], "csv", out)
        else:
            json.dump(verdict, out, indent=2)
            out.write("\n")
    if verdict["violations"] or verdict["equality_exceptions"]:
        print(f"bound violated on {len(verdict['violations'])} witness pair(s)", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_extremal(args):
    n = _resolve(args, "n")
    p = _resolve(args, "p")
    k = _resolve(args, "k")
    if p < 0 or k < 0:
        raise _usage("p and k must be nonnegative")
    if n < corollary_min_order(p, k):
        raise _usage(f"need n >= {corollary_min_order(p, k)} for p={p}, k={k}")
    source = None
    if args.input is not None:
        source = [g for _, g in _read_graphs(args.input)]
    elif n > MAX_ENUM_ORDER:
        raise _usage(f"n must be <= {MAX_ENUM_ORDER} for the built-in enumerator")
    expected = []
    if args.expect:
        for name in args.expect.split(","):
            try:
                expected.append(fam.join_with_complete(fam.family(name.strip(), n - p), p))
            except GraphError as exc:
                raise _usage(str(exc)) from None
    report = extremal_search(n, p, k, workers=args.workers, source=source)
    js = report.to_json()
    with _output(args.out) as out:
        if args.format == "csv":
            _write_table([js], list(js), "csv", out)
        else:
            json.dump(js, out, indent=2)
            out.write("\n")
    if expected:
        verdict = verify_uniqueness(report, expected, args.index)
        if not verdict.ok:
            print("expectation mismatch; counterexample graph6: " + " ".join(verdict.counterexamples_graph6()),
                  file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_enumerate(args):
    n = _resolve(args, "n")
    k = _resolve(args, "k", required=False)
    p = _resolve(args, "p", required=False)
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise _usage(f"n must be in 1..{MAX_ENUM_ORDER}")
    if p is not None and k is None:
        raise _usage("--p needs --k")
    if p is not None:
        graphs = enumerate_quasi_class(n, p, k, workers=args.workers)
    elif k is not None:
        graphs = enumerate_kcyclic(n, k, workers=args.workers)
    else:
        graphs = enumerate_connected(n, workers=args.workers)
    with _output(args.out) as out:
        if args.format == "graph6":
            for g in graphs:
                out.write(to_graph6(g) + "\n")
        else:
            rows = [{"graph6": to_graph6(g), "m": g.size} for g in graphs]
            _write_table(rows, ["graph6", "m"], args.format, out)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasizagreb",
        description="Zagreb indices and extremal p-quasi k-cyclic graphs: construction, classification, "
                    "bound checks and exhaustive verification.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json"):
        p.add_argument("--format", choices=["json", "csv", "graph6"], default=fmt_default)
        p.add_argument("--out", help="output path (default: standard output)")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("construct", help="emit a family member, optionally joined with K_p, as graph6")
    p.add_argument("family_pos", nargs="?", metavar="FAMILY", choices=sorted(fam.FAMILIES))
    p.add_argument("--family", choices=sorted(fam.FAMILIES))
    _add_npk(p, names=("n",))
    p.add_argument("--join-p", type=int, default=0)
    common(p, "graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("invariants", help="n, m, M1, M2 and cyclomatic number for graph6 input")
    p.add_argument("input_pos", nargs="?", metavar="INPUT")
    p.add_argument("--in", dest="input")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="minimum deletion size to a connected k-cyclic graph")
    _add_npk(p, names=("k",))
    p.add_argument("--in", dest="input")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-bound", help="check the M1/M2 bounds over every witness pair")
    _add_npk(p)
    p.add_argument("--source", default="enumerate", help="'enumerate' or a graph6 file")
    p.add_argument("--in", dest="input", help="graph6 file (same as --source FILE)")
    p.add_argument("--variant", type=_variant, default=Variant.CORRECTED,
                   help="corrected (default) or as-printed")
    common(p)
    p.set_defaults(func=cmd_verify_bound)

    p = sub.add_parser("extremal", help="maximizers of M1 and M2 over Q_pC^k(n)")
    _add_npk(p)
    p.add_argument("--expect", help="comma-separated families F; expects F(n-p) + K_p as the maximizers")
    p.add_argument("--index", choices=["m1", "m2", "both"], default="both")
    p.add_argument("--in", dest="input", help="graph6 file replacing the built-in enumerator")
    common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("enumerate", help="connected graphs, optionally k-cyclic or in Q_pC^k(n)")
    _add_npk(p, names=("n",))
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    common(p, "graph6")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"quasizagreb {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
