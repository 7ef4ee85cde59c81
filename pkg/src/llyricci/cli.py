"""Command-line front end.

Exit codes: 0 success / statement holds, 1 statement fails, 2 usage or
input error, 3 precondition not met, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import __version__
from .curvature import curvature_all_edges, kappa_alpha, kappa_lly
from .errors import (
    ArgumentError,
    ConstructionError,
    DisconnectedError,
    NotHypercubeError,
    ParseError,
    PreconditionError,
    RicciError,
    ScaleError,
)
from .generators import FAMILIES
from .graph import Graph
from .graph6 import graph6_decode, graph6_encode
from .numerics import DEFAULT_MAX_BITS, Verdict, as_rational, binomial_partial_sum, check_noninteger_lemma
from .report import format_edge_list, json_report_write, make_document, parse_edge_list, to_json_value
from .search import c5_power_experiment, scan_conjecture1, scan_conjecture2
from . import verifiers as V

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4

VERIFY_STATEMENTS = ("gamma", "gamma-lly", "matching", "regular", "diameter", "bound", "iso-qd",
                     "layers", "adj-pair", "lly-bound", "noninteger")


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError, ArgumentError):
        raise argparse.ArgumentTypeError(f"expected an exact rational like 3/4, got {text!r}") from None


def _pair_arg(text: str) -> tuple[int, int]:
    try:
        u, v = (int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a vertex pair like 0,1, got {text!r}") from None
    return u, v


def read_graph(path: str | None, fmt: str) -> Graph:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    if fmt == "edgelist":
        return parse_edge_list(text)
    lines = [(no, ln) for no, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if len(lines) != 1:
        raise UsageError(f"expected exactly one graph6 line, found {len(lines)}")
    no, line = lines[0]
    return graph6_decode(line, no)


def _permute(g: Graph, seed: int | None) -> Graph:
    if seed is None:
        return g
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


def _emit(doc: dict, args, text_lines: list[str]):
    if args.json:
        json_report_write(doc, sys.stdout)
    else:
        for line in text_lines:
            print(line)


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    build, arity = FAMILIES[args.family]
    if len(args.params) != arity:
        raise UsageError(f"{args.family} takes {arity} integer parameter(s)")
    g = _permute(build(*(int(p) for p in args.params)), args.seed)
    sys.stdout.write(graph6_encode(g) + "\n" if args.format == "graph6" else format_edge_list(g))
    return EXIT_OK


def cmd_curv(args) -> int:
    g = _permute(read_graph(args.input, args.format), args.seed)
    if args.mode == "all":
        reports = curvature_all_edges(g, jobs=args.jobs)
    else:
        if args.pair is None:
            raise UsageError(f"curv {args.mode} needs --pair u,v")
        u, v = args.pair
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise UsageError(f"vertex out of range 0..{g.n - 1}")
        if args.mode == "edge" and not g.has_edge(u, v):
            raise UsageError(f"({u}, {v}) is not an edge; use 'curv pair' for non-adjacent vertices")
        reports = [kappa_lly(g, u, v)]
    if args.alpha is not None:
        for r in reports:
            r.kappa_alpha = (args.alpha, kappa_alpha(g, r.x, r.y, args.alpha))
    lines = []
    for r in reports:
        line = f"{r.x} {r.y} {r.kappa}"
        if r.kappa_alpha is not None:
            line += f" kappa_alpha({r.kappa_alpha[0]})={r.kappa_alpha[1]}"
        if args.witness:
            line += " f=" + ",".join(f"{v}:{f}" for v, f in r.witness.items())
        lines.append(line)
        for note in r.notes:
            print(f"note: {note}", file=sys.stderr)
    doc = make_document(args.input or "stdin", g, curvature=reports, witness=args.witness)
    _emit(doc, args, lines)
    return EXIT_OK


def _noninteger(args) -> int:
    if args.s is None:
        raise UsageError("verify noninteger needs --s p/q")
    s = args.s
    if s.denominator == 1:
        total = binomial_partial_sum(s, int(s) + 1)
        holds = s >= 1 and total == 2 ** int(s)
        verdict = V.VerifierVerdict("noninteger", holds, None if holds else {"lhs": total, "rhs": 2 ** int(s)},
                                    {"s": s, "integer_case": True, "sum": total})
    else:
        cmp = check_noninteger_lemma(s, max_bits=args.max_precision_bits)
        if cmp.verdict is Verdict.INCONCLUSIVE:
            raise RicciError(f"inconclusive at {cmp.bits} bits")
        holds = cmp.verdict is Verdict.STRICTLY_LESS
        verdict = V.VerifierVerdict("noninteger", holds,
                                    None if holds else {"lhs": cmp.lhs, "rhs": (cmp.rhs_lower, cmp.rhs_upper)},
                                    {"s": s, "lhs": cmp.lhs, "rhs_lower": cmp.rhs_lower,
                                     "rhs_upper": cmp.rhs_upper, "bits": cmp.bits, "verdict": cmp.verdict})
    return _report_verdict(verdict, args, None)


def _report_verdict(verdict: V.VerifierVerdict, args, g: Graph | None) -> int:
    doc = make_document(args.input or "stdin", g, verdicts=[verdict])
    status = "holds" if verdict.holds else "FAILS"
    lines = [f"{verdict.statement}: {status}"]
    for key in ("equality", "all_tight", "kappa", "dimension"):
        if key in verdict.context:
            lines.append(f"  {key} = {verdict.context[key]}")
    _emit(doc, args, lines)
    if not verdict.holds:
        print(json.dumps({"witness": to_json_value(verdict.witness)}, sort_keys=True), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.statement == "noninteger":
        return _noninteger(args)
    g = _permute(read_graph(args.input, args.format), args.seed)
    st = args.statement
    if st == "gamma":
        verdict = V.check_gamma_inequality(g)
    elif st == "gamma-lly":
        verdict = V.check_gamma_inequality(g, form="lly")
    elif st == "matching":
        verdict = V.check_matching_lemma(g)
    elif st == "regular":
        verdict = V.check_regular_constant(g)
    elif st == "diameter":
        verdict = V.check_diameter_bound(g)
    elif st == "bound":
        verdict = V.check_main_bound(g, max_bits=args.max_precision_bits)
    elif st == "layers":
        verdict = V.check_layer_counts(g)
    elif st == "adj-pair":
        verdict = V.check_pair_reduction(g)
    elif st == "lly-bound":
        verdict = V.check_lly_order_bound(g)
    else:  # iso-qd
        try:
            lab = V.hypercube_labeling(g)
            verdict = V.VerifierVerdict("iso-qd", True, None, {
                "dimension": lab.dimension,
                "labels": {v: sorted(s) for v, s in lab.labels.items()},
            })
        except NotHypercubeError as exc:
            verdict = V.VerifierVerdict("iso-qd", False, {"reason": str(exc), "vertex": exc.vertex})
    return _report_verdict(verdict, args, g)


def cmd_scan(args) -> int:
    if args.kind == "c5pow":
        results = [c5_power_experiment(k, jobs=args.jobs) for k in range(1, args.k + 1)]
        for r in results:
            print(f"C5^{r['k']}: n={r['n']} Delta={r['max_degree']} kappa={r['min_curvature']} "
                  f"n^2={r['n_squared']} 5^Delta={r['five_power']} tight={r['tight']}")
        if args.out:
            with open(args.out, "w") as fh:
                json.dump(to_json_value(results), fh, sort_keys=True, indent=2)
                fh.write("\n")
        ok = all(r["tight"] and r["positive_curvature"] for r in results)
        return EXIT_OK if ok else EXIT_FAIL

    if args.source is None:
        raise UsageError("scan needs --source enum:<n> or file:<path>")
    sink_fh = open(args.out, "w") if args.out else None

    def sink(rec):
        if sink_fh:
            sink_fh.write(json.dumps(to_json_value(rec), sort_keys=True) + "\n")

    runner = scan_conjecture1 if args.kind == "c1" else scan_conjecture2
    try:
        summary, records = runner(args.source, jobs=args.jobs, sink=sink, keep_records=args.json)
    finally:
        if sink_fh:
            sink_fh.close()
    if args.json:
        json_report_write(make_document(args.source, scan=(summary, records)), sys.stdout)
    else:
        print(f"scan {args.kind} over {args.source}: {summary.scanned} graphs")
        for status, count in sorted(summary.totals.items()):
            print(f"  {status}: {count}")
        print(f"  candidate counterexamples: {summary.candidates}")
        tight = summary.tight_c1 if args.kind == "c1" else summary.tight_c2
        print(f"  tight instances: {', '.join(tight) if tight else 'none'}")
        print(f"  runtime: {summary.runtime_ms} ms")
    return EXIT_FAIL if summary.candidates else EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report on stdout")
    common.add_argument("--witness", action="store_true", help="include dual and matching witnesses")
    common.add_argument("--seed", type=int, default=None, help="randomly relabel vertices with this seed")
    common.add_argument("--max-precision-bits", type=int, default=DEFAULT_MAX_BITS)
    common.add_argument("--jobs", type=int, default=int(os.environ.get("RICCI_JOBS", "1")))

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--input", default=None, help="graph file, '-' or omitted for stdin")
    io.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    parser = argparse.ArgumentParser(prog="llyricci", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit a standard graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("curv", parents=[common, io], help="curvature of edges or pairs")
    p.add_argument("mode", choices=("edge", "all", "pair"))
    p.add_argument("--pair", type=_pair_arg, default=None)
    p.add_argument("--alpha", type=_rational_arg, default=None)
    p.set_defaults(func=cmd_curv)

    p = sub.add_parser("verify", parents=[common, io], help="check one statement on a graph")
    p.add_argument("statement", choices=VERIFY_STATEMENTS)
    p.add_argument("--s", type=_rational_arg, default=None, help="exponent for 'noninteger'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="conjecture evidence scans")
    p.add_argument("kind", choices=("c1", "c2", "c5pow"))
    p.add_argument("--source", default=None)
    p.add_argument("--out", default=None, help="write one JSON record per line here")
    p.add_argument("--k", type=int, default=2, help="largest power for c5pow")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ConstructionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArgumentError, ScaleError) as exc:
        print(f"argument error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, DisconnectedError) as exc:
        print(f"precondition not met: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except RicciError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
