"""Command-line front end: tables, single values, and identity audits.

Exactness is the product, so the parameter is entered either as the literal
``symbolic`` or as a rational ``p/q``; there is no floating-point entry.
Output is deterministic byte for byte: fixed row order (n ascending, then
the column index ascending), canonical value strings, two-space JSON
indentation.

Exit codes: 0 on success (for ``verify``: every as-derived report holds),
1 when an as-derived report fails, 2 on usage or computation errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import identities
from .bernoulli import bell_partial, degen_bernoulli, k_lambda, trunc_degen_bernoulli
from .errors import DegenstirError
from .field import as_rational, rational_str
from .stirling import (
    KIND_FIRST,
    KIND_FIRST_TRUNCATED,
    KIND_SECOND,
    KIND_SECOND_TRUNCATED,
    build_triangle,
    stirling1_degen,
    stirling1r_gf,
    stirling2_degen,
    stirling2r_gf,
)

FAMILIES = ("stirling1", "stirling2", "stirling2r", "stirling1r",
            "bernoulli", "trunc-bernoulli", "bell", "klambda")

_TRIANGLE_KINDS = {
    "stirling2": KIND_SECOND,
    "stirling1": KIND_FIRST,
    "stirling2r": KIND_SECOND_TRUNCATED,
    "stirling1r": KIND_FIRST_TRUNCATED,
}


_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def _rational(text: str) -> Fraction:
    # only integer and p/q forms; decimal/float notation is rejected
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError("not a rational p/q: %r" % (text,))
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError("zero denominator: %r" % (text,))


def _lambda_mode(text: str):
    if text == "symbolic":
        return None
    return _rational(text)


def _xs_list(text: str):
    return [_rational(part) for part in text.split(",") if part != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenstir",
        description="Exact tables and identity audits for deformed special numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--lambda", dest="lam", type=_lambda_mode, default=None,
                       metavar="p/q|symbolic",
                       help="parameter mode: a rational p/q, or 'symbolic' (default)")
        p.add_argument("--r", type=int, default=1, help="truncation depth (>= 1)")
        p.add_argument("--alpha", type=int, default=1, help="order (>= 1)")
        p.add_argument("--x", type=_rational, default=Fraction(0),
                       help="polynomial argument for Bernoulli families")
        p.add_argument("--xs", type=_xs_list, default=None,
                       help="comma-separated rationals for bell/klambda (default: all ones)")
        p.add_argument("--precision", type=int, default=None,
                       help="override the derived working precision (warns when lower)")

    table = sub.add_parser("table", help="stream a triangle or sequence")
    table.add_argument("family", choices=FAMILIES)
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--k-max", type=int, default=None)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    common(table)

    ev = sub.add_parser("eval", help="print one canonical value")
    ev.add_argument("family", choices=FAMILIES)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--k", type=int, default=0)
    common(ev)

    ver = sub.add_parser("verify", help="audit an identity over a parameter grid")
    ver.add_argument("--identity", required=True,
                     choices=identities.IDENTITY_TAGS + ("all",))
    ver.add_argument("--n-max", type=int, default=None)
    ver.add_argument("--k-max", type=int, default=None)
    ver.add_argument("--r", dest="r_max", type=int, default=None,
                     help="sweep bound for the truncation depth")
    ver.add_argument("--alpha", dest="alpha_max", type=int, default=None,
                     help="sweep bound for the order")
    ver.add_argument("--lambda", dest="lam", type=_lambda_mode, default=None,
                     metavar="p/q|symbolic")
    return parser


def _validate(args, parser):
    if getattr(args, "r", 1) is not None and getattr(args, "r", 1) < 1:
        parser.error("--r must be at least 1")
    if getattr(args, "alpha", 1) is not None and getattr(args, "alpha", 1) < 1:
        parser.error("--alpha must be at least 1")
    if getattr(args, "n_max", 0) is not None and getattr(args, "n_max", 0) < 0:
        parser.error("--n-max must be nonnegative")


def _pick_precision(args, derived: int) -> int:
    if args.precision is None:
        return derived
    if args.precision < derived:
        print("warning: --precision %d is below the derived safe bound %d"
              % (args.precision, derived), file=sys.stderr)
    return args.precision


def _default_xs(args, length: int):
    if args.xs is not None:
        return args.xs
    return [Fraction(1)] * length


def _sequence_rows(args, n_max):
    """(n, column, value) rows for the non-triangle families."""
    rows = []
    if args.family == "bernoulli":
        for n in range(n_max + 1):
            v = degen_bernoulli(n, args.alpha, args.x, N=_pick_precision(args, n), lam=args.lam)
            rows.append((n, args.alpha, v))
    elif args.family == "trunc-bernoulli":
        for n in range(n_max + 1):
            v = trunc_degen_bernoulli(n, args.r, args.alpha, args.x,
                                      N=_pick_precision(args, n), lam=args.lam)
            rows.append((n, args.alpha, v))
    elif args.family == "bell":
        k_max = n_max if args.k_max is None else args.k_max
        xs = _default_xs(args, n_max)
        for n in range(n_max + 1):
            for k in range(min(n, k_max) + 1):
                rows.append((n, k, bell_partial(n, k, xs, lam=args.lam)))
    else:  # klambda
        xs = _default_xs(args, n_max)
        for n in range(n_max + 1):
            rows.append((n, 0, k_lambda(n, xs, lam=args.lam)))
    return rows


def _run_table(args) -> int:
    kind = _TRIANGLE_KINDS.get(args.family)
    if kind is not None:
        tri = build_triangle(kind, args.n_max, args.k_max, args.r, args.lam,
                             N=_pick_precision(args, args.n_max))
        rows = list(tri.rows())
    else:
        rows = _sequence_rows(args, args.n_max)
    lam_label = "symbolic" if args.lam is None else rational_str(args.lam)
    if args.format == "csv":
        print("n,k,value")
        for n, k, value in rows:
            print("%d,%d,%s" % (n, k, value))
    else:
        obj = {
            "family": args.family,
            "lambda": lam_label,
            "entries": [{"n": n, "k": k, "value": str(v)} for n, k, v in rows],
        }
        print(json.dumps(obj, indent=2))
    return 0


def _run_eval(args) -> int:
    n, k = args.n, args.k
    prec = _pick_precision(args, n)
    fam = args.family
    if fam == "stirling2":
        value = stirling2_degen(n, k, N=prec, lam=args.lam)
    elif fam == "stirling1":
        value = stirling1_degen(n, k, N=prec, lam=args.lam)
    elif fam == "stirling2r":
        value = stirling2r_gf(n, k, args.r, N=prec, lam=args.lam)
    elif fam == "stirling1r":
        value = stirling1r_gf(n, k, args.r, N=prec, lam=args.lam)
    elif fam == "bernoulli":
        value = degen_bernoulli(n, args.alpha, args.x, N=prec, lam=args.lam)
    elif fam == "trunc-bernoulli":
        value = trunc_degen_bernoulli(n, args.r, args.alpha, args.x, N=prec, lam=args.lam)
    elif fam == "bell":
        value = bell_partial(n, k, _default_xs(args, max(n, 1)), lam=args.lam)
    else:
        value = k_lambda(n, _default_xs(args, max(n, 1)), lam=args.lam)
    print(str(value))
    return 0


def _run_verify(args) -> int:
    tags = identities.IDENTITY_TAGS if args.identity == "all" else (args.identity,)
    reports = []
    for tag in tags:
        reports.extend(identities.sweep(
            tag, n_max=args.n_max, k_max=args.k_max,
            r_max=args.r_max, alpha_max=args.alpha_max, lam=args.lam))
    print(json.dumps([rep.to_json_obj() for rep in reports], indent=2))
    return 0 if identities.all_derived_equal(reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        if args.command == "table":
            return _run_table(args)
        if args.command == "eval":
            return _run_eval(args)
        return _run_verify(args)
    except DegenstirError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


def run_main():
    sys.exit(main())


if __name__ == "__main__":
    run_main()
