"""Command-line surface.

Commands: invariants, recognize {cl|wl|sig}, gen {lrc|lrw}, reg, verify,
search-l2.  All output is JSON (pretty by default, --compact for one-line).
Exit codes: 0 success or recognized, 1 usage or parse error, 2 principled
negative (not recognized / impossible request / failed verification).
"""

from __future__ import annotations

import argparse
import sys

from . import formats as fm
from . import graphs as gr
from . import recognition as rec
from . import regularity as rg
from . import verification as vf
from . import witnesses as wt

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2


def _emit(obj, args):
    print(fm.dumps(obj, compact=args.compact))


def _load(args):
    return fm.load_graph(args.input, fmt=args.format)


def cmd_invariants(args):
    g = _load(args)
    inv = gr.invariants(g)
    lo, hi = rg.bounds(g)
    _emit({
        "n": g.n,
        "edges": g.edge_count(),
        "components": inv.component_count,
        "ell": inv.ell,
        "cliqueCount": inv.clique_count,
        "omega": inv.omega,
        "chordal": inv.chordal,
        "bounds": {"lo": lo, "hi": hi},
    }, args)
    return EXIT_OK


def cmd_recognize(args):
    g = _load(args)
    if args.kind == "cl":
        result = rec.recognize_cl(g)
        if isinstance(result, rec.NotCLReason):
            _emit({"recognized": False,
                   "componentIndex": result.component_index,
                   "ell": result.ell,
                   "cliqueCount": result.clique_count}, args)
            return EXIT_NEGATIVE
        problem = rec.validate_cl_certificate(g, result)
        if problem is not None:
            raise RuntimeError(f"certificate failed validation: {problem}")
        _emit(fm.cl_certificate_to_jsonable(result), args)
        return EXIT_OK
    if args.kind == "wl":
        if g.n == 0 or not gr.is_connected(g):
            print("error: wl recognition needs a connected graph", file=sys.stderr)
            return EXIT_USAGE
        result = rec.recognize_wl(g)
        if isinstance(result, rec.NotWLReason):
            _emit({"recognized": False, "ell": result.ell,
                   "n": result.n, "omega": result.omega}, args)
            return EXIT_NEGATIVE
        problem = rec.validate_wl_decomposition(g, result)
        if problem is not None:
            raise RuntimeError(f"decomposition failed validation: {problem}")
        _emit(fm.wl_to_jsonable(result), args)
        return EXIT_OK
    # sig
    result = rec.recognize_sig(g)
    payload = {"recognized": result.is_sig}
    if result.families is not None:
        payload["families"] = [
            {"ell": fam.ell,
             "I": [[list(seg) for seg in u.segments] for u in fam.I]}
            for fam in result.families]
    _emit(payload, args)
    return EXIT_OK if result.is_sig else EXIT_NEGATIVE


def cmd_gen(args):
    try:
        if args.kind == "lrc":
            g = wt.gen_lrc(args.ell, args.r, args.bound)
        else:
            g = wt.gen_lrw(args.ell, args.r, args.bound)
    except ValueError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.verify:
        inv = gr.invariants(g)
        report = rg.structural_reg(g)
        ok = inv.ell == args.ell and report.exact and report.value == args.r
        if args.kind == "lrc":
            ok = ok and inv.clique_count == args.bound
        else:
            ok = ok and g.n - inv.omega + 1 == args.bound
        if not ok:
            print("error: generated graph failed re-verification", file=sys.stderr)
            return EXIT_USAGE
    _emit(fm.graph_to_jsonable(g), args)
    return EXIT_OK


def cmd_reg(args):
    g = _load(args)
    try:
        report = rg.reg(g, method=args.method, budget=args.budget,
                        oracle_max_n=args.oracle_max_n)
    except rg.OracleGateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(fm.report_to_jsonable(report), args)
    return EXIT_OK


def cmd_verify(args):
    report = vf.run_verification(max_n=args.max_n,
                                 connected_only=args.connected_only,
                                 jobs=args.jobs)
    _emit(report.to_jsonable(), args)
    return EXIT_OK if report.all_passed else EXIT_NEGATIVE


def cmd_search_l2(args):
    try:
        hits = wt.search_l2(args.r, args.wbar, args.max_omega)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit({"r": args.r, "wbar": args.wbar, "maxOmega": args.max_omega,
           "hits": [fm.graph_to_jsonable(g) for g in hits]}, args)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="beireg",
        description="Certify and compute regularity bounds of binomial edge ideals")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--compact", action="store_true",
                        help="one-line JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file")
        p.add_argument("--format", choices=["edgelist", "json"], default=None,
                       help="input format (default: sniff)")

    p = sub.add_parser("invariants", parents=[common],
                       help="graph invariants and bounds")
    add_input(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("recognize", parents=[common],
                       help="recognize cl/wl/sig with certificate")
    p.add_argument("kind", choices=["cl", "wl", "sig"])
    add_input(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("gen", parents=[common], help="generate a witness graph")
    p.add_argument("kind", choices=["lrc", "lrw"])
    p.add_argument("ell", type=int)
    p.add_argument("r", type=int)
    p.add_argument("bound", type=int,
                   help="clique count (lrc) or n - omega + 1 (lrw)")
    p.add_argument("--verify", action="store_true",
                   help="re-check invariants and regularity before emitting")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reg", parents=[common], help="regularity report")
    add_input(p)
    p.add_argument("--method", choices=["auto", "structural", "oracle"],
                   default="auto")
    p.add_argument("--budget", type=int, default=rg.DEFAULT_BUDGET,
                   help="refinement recursion depth")
    p.add_argument("--oracle-max-n", type=int, default=None,
                   help=f"oracle size gate (default 8, or ${rg.ORACLE_MAX_N_ENV})")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem sweep")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-l2", parents=[common],
                       help="explore length-2 realizability")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--wbar", type=int, required=True)
    p.add_argument("--max-omega", type=int, required=True)
    p.set_defaults(func=cmd_search_l2)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (fm.ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
