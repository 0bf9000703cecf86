"""Command-line front end.

JSON results go to stdout, diagnostics to stderr.  Exit codes: 0 for
success (bounds hold, criterion holds, verification passed), 1 for a
certified violation or failed verification, 2 for usage errors, and 3 when
the answer is window-limited or undecidable from the data given.

Randomized subcommands take --seed; without it the RIVER_BANKS_SEED
environment variable applies, and failing that the documented default 1729.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction

from river_banks import golden
from river_banks.boij_soderberg import (
    NotDecomposableWithinScope,
    NotZeroRegularError,
    decompose,
)
from river_banks.bounds import (
    check_sharpness,
    check_tensor_bounds,
    tensor_homogeneous,
    unobstructed_criterion,
)
from river_banks.exterior import TwoForm, kernel_dim
from river_banks.expr import ExprError, table_from_expr
from river_banks.partitions import GenPartition
from river_banks.tables import (
    BottSumTable,
    UndecidableError,
    WindowExceededError,
    literal_from_json,
    parse_ascii,
    regularity_profile,
    render_ascii,
    table_to_json,
)

OK, VIOLATION, USAGE, LIMITED = 0, 1, 2, 3
DEFAULT_SEED = 1729


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _fail(message, code):
    print(message, file=sys.stderr)
    return code


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("RIVER_BANKS_SEED")
    return int(env) if env else DEFAULT_SEED


def _load_table(ref):
    """A table from a file path (ASCII or JSON by extension) or an expression."""
    if os.path.exists(ref):
        with open(ref) as fh:
            text = fh.read()
        if ref.endswith(".json"):
            return literal_from_json(json.loads(text))
        return parse_ascii(text)
    return table_from_expr(ref)


def _window(text):
    lo, _, hi = text.partition(":")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be lo:hi, got {text!r}")


def _cmd_table(args):
    t = table_from_expr(args.expr)
    lo, hi = args.window
    if args.format == "ascii":
        sys.stdout.write(render_ascii(t, lo, hi))
    else:
        _emit(table_to_json(t, lo, hi))
    return OK


def _cmd_indices(args):
    t = _load_table(args.table)
    prof = regularity_profile(t)
    _emit({"n": t.n, **prof.to_json()})
    limited = any(prof.reg_window_limited) or any(prof.coreg_window_limited)
    return LIMITED if limited else OK


def _cmd_tensor(args):
    tf = table_from_expr(args.f)
    tg = table_from_expr(args.g)
    if not isinstance(tf, BottSumTable) or not isinstance(tg, BottSumTable):
        return _fail(
            "tensor products are computed for homogeneous sums only; compute the "
            "product table elsewhere and hand it to check-bounds as a file",
            USAGE,
        )
    product = tensor_homogeneous(tf, tg)
    if args.window is not None:
        lo, hi = args.window
        sys.stdout.write(render_ascii(product, lo, hi))
    else:
        _emit({
            "n": product.n,
            "terms": [{"mult": str(m), "lambda": str(lam)} for m, lam in product.terms],
        })
    return OK


def _cmd_check_bounds(args):
    tf, tg, tfg = (_load_table(s) for s in (args.f, args.g, args.fg))
    reg_rep, coreg_rep = check_tensor_bounds(tf, tg, tfg)
    _emit({"reg": reg_rep.to_json(), "coreg": coreg_rep.to_json()})
    if reg_rep.certified_violation or coreg_rep.certified_violation:
        return VIOLATION
    if reg_rep.window_limited or coreg_rep.window_limited:
        return LIMITED
    return OK


def _cmd_check_sharpness(args):
    lam = GenPartition.parse(args.lam)
    mu = GenPartition.parse(args.mu)
    if lam.n != args.n or mu.n != args.n:
        return _fail(f"partitions must have length {args.n}", USAGE)
    report = check_sharpness(lam, mu)
    _emit(report.to_json())
    return OK if report.all_equal else VIOLATION


def _cmd_decompose(args):
    t = _load_table(args.table)
    try:
        dec = decompose(t)
    except NotZeroRegularError as exc:
        return _fail(str(exc), USAGE)
    except NotDecomposableWithinScope as exc:
        print(f"not decomposable within scope: {exc.reason}", file=sys.stderr)
        _emit(exc.partial.to_json())
        return LIMITED
    _emit(dec.to_json())
    return OK


def _cmd_unobstructed(args):
    t = _load_table(args.table)
    report = unobstructed_criterion(t)
    _emit(report.to_json())
    if report.window_limited:
        return LIMITED
    return OK if report.holds else VIOLATION


def _parse_two_form(text):
    pairs = json.loads(text)
    return TwoForm.from_pairs(
        ((int(i), int(j)), Fraction(c)) for (i, j), c in pairs
    )


def _cmd_wedge_kernel(args):
    if (args.eta1 is None) != (args.eta2 is None):
        return _fail("--eta1 and --eta2 must be given together", USAGE)
    if args.eta1 is not None:
        dim = kernel_dim(_parse_two_form(args.eta1), _parse_two_form(args.eta2))
        _emit({"kernel_dim": dim})
        return OK if dim >= 1 else VIOLATION
    rng = random.Random(_seed(args))
    dims = [kernel_dim(TwoForm.random(rng), TwoForm.random(rng))
            for _ in range(args.trials)]
    _emit({
        "trials": args.trials,
        "seed": _seed(args),
        "min_kernel_dim": min(dims),
        "kernel_dims": dims,
    })
    return OK if min(dims) >= 1 else VIOLATION


def _cmd_golden(args):
    if args.action != "verify":
        return _fail(f"unknown golden action {args.action!r}", USAGE)
    checks = golden.verify()
    ok = all(passed for _, passed, _ in checks)
    _emit({
        "ok": ok,
        "checks": [{"name": name, "ok": passed, **({"detail": detail} if detail else {})}
                   for name, passed, detail in checks],
    })
    return OK if ok else VIOLATION


def _allow_leading_dash(parser):
    # lets values like -4:3 pass as option arguments instead of option names
    parser._negative_number_matcher = re.compile(r"^-\d")
    return parser


def build_parser():
    parser = _allow_leading_dash(argparse.ArgumentParser(
        prog="river-banks",
        description="Exact cohomology tables of bundles on projective space",
    ))
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: _allow_leading_dash(
                                    argparse.ArgumentParser(**kw)))

    p = sub.add_parser("table", help="render a table over a display window")
    p.add_argument("expr")
    p.add_argument("--window", type=_window, required=True, metavar="LO:HI")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("indices", help="regularity/coregularity profile")
    p.add_argument("table", help="expression or table file (.txt ascii / .json)")
    p.set_defaults(func=_cmd_indices)

    p = sub.add_parser("tensor", help="tensor product of homogeneous sums")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--window", type=_window, default=None, metavar="LO:HI")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("check-bounds", help="evaluate the tensor-product bounds")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("fg", help="table of the product (usually a file)")
    p.set_defaults(func=_cmd_check_bounds)

    p = sub.add_parser("check-sharpness", help="equality report for a pair of labels")
    p.add_argument("lam", metavar="lambda", help="e.g. 1,0")
    p.add_argument("mu", help="e.g. 1,0")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_check_sharpness)

    p = sub.add_parser("decompose", help="greedy chain decomposition")
    p.add_argument("table")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("unobstructed", help="obstruction-vanishing margin test")
    p.add_argument("table")
    p.set_defaults(func=_cmd_unobstructed)

    p = sub.add_parser("wedge-kernel", help="kernel dimensions of wedge pairs")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--eta1", help='JSON pairs, e.g. [[[1,2],"1"],[[3,4],"1/2"]]')
    p.add_argument("--eta2")
    p.set_defaults(func=_cmd_wedge_kernel)

    p = sub.add_parser("golden", help="verify the bundled reference tables")
    p.add_argument("action", choices=("verify",))
    p.set_defaults(func=_cmd_golden)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except ExprError as exc:
        return _fail(f"expression error: {exc}", USAGE)
    except (WindowExceededError, UndecidableError) as exc:
        return _fail(str(exc), LIMITED)
    except (ValueError, TypeError, OSError, json.JSONDecodeError, KeyError) as exc:
        return _fail(str(exc), USAGE)


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
