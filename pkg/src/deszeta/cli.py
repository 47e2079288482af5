"""Command-line front end: exact tables, coefficient export, single
evaluations, and the verification suite runner.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 the
numerical tolerance could not be met.
"""

import argparse
import json
import sys
from fractions import Fraction
from itertools import product

from .coeffs import combination, expand_G
from .cyclotomic import RootOfUnity, twisted_bernoulli
from .exact import bernoulli_number, format_rational
from .numeric import ToleranceError, desing1, desing2
from .values import desing_value_exact
from .verify import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3

# flags whose values may start with "-" (negative numbers); folded into
# --flag=value form so the argument parser does not mistake them for options
_VALUE_FLAGS = ("--s", "--gamma", "--a-list")


def _usage(msg):
    print("error: %s" % msg, file=sys.stderr)
    return EXIT_USAGE


def _parse_fractions(text):
    return [Fraction(part) for part in text.split(",")]


def cmd_bernoulli(args):
    if args.max < 0:
        return _usage("--max must be non-negative")
    values = [format_rational(bernoulli_number(n)) for n in range(args.max + 1)]
    if args.format == "json":
        print(json.dumps({"max": args.max, "values": values}))
    else:
        for v in values:
            print(v)
    return EXIT_OK


def cmd_twisted_bernoulli(args):
    if args.c < 2:
        return _usage("--c must be at least 2")
    if args.a % args.c == 0:
        return _usage("--a must give a nontrivial root (a not divisible by c)")
    if args.max < 0:
        return _usage("--max must be non-negative")
    xi = RootOfUnity(args.c, args.a)
    rows = [(n, twisted_bernoulli(n, xi)) for n in range(args.max + 1)]
    if args.format == "json":
        print(json.dumps({
            "c": args.c,
            "a": xi.a,
            "values": [{"n": n, "element": e.to_json()} for n, e in rows],
        }))
    else:
        for n, e in rows:
            print(",".join([str(n)] + [format_rational(x) for x in e.coeffs]))
    return EXIT_OK


def cmd_multi_bernoulli(args):
    from .values import twisted_multiple_bernoulli

    if args.r < 1:
        return _usage("--r must be positive")
    if args.c < 2:
        return _usage("--c must be at least 2")
    if args.max < 0:
        return _usage("--max must be non-negative")
    try:
        a_list = [int(a) for a in args.a_list.split(",")]
        gammas = _parse_fractions(args.gamma) if args.gamma else [Fraction(1)] * args.r
    except (ValueError, ZeroDivisionError) as exc:
        return _usage(str(exc))
    if len(a_list) != args.r or len(gammas) != args.r:
        return _usage("--a-list and --gamma must have r entries")
    if any(a % args.c == 0 for a in a_list):
        return _usage("all roots must be nontrivial")
    xis = [RootOfUnity(args.c, a) for a in a_list]
    rows = []
    for n in product(range(args.max + 1), repeat=args.r):
        rows.append((n, twisted_multiple_bernoulli(n, xis, gammas)))
    if args.format == "json":
        print(json.dumps({
            "r": args.r,
            "c": args.c,
            "a": [xi.a for xi in xis],
            "gamma": [format_rational(g) for g in gammas],
            "values": [{"n": list(n), "element": e.to_json()} for n, e in rows],
        }))
    else:
        for n, e in rows:
            print(",".join([str(x) for x in n] + [format_rational(x) for x in e.coeffs]))
    return EXIT_OK


def cmd_desing_values(args):
    if not 1 <= args.r <= 4:
        return _usage("--r must be between 1 and 4")
    if not 0 <= args.kmax <= 8:
        return _usage("--kmax must be between 0 and 8")
    try:
        gammas = _parse_fractions(args.gamma) if args.gamma else [Fraction(1)] * args.r
    except (ValueError, ZeroDivisionError) as exc:
        return _usage(str(exc))
    if len(gammas) != args.r:
        return _usage("--gamma must have r entries")
    if any(g == 0 for g in gammas):
        return _usage("weights must be nonzero")
    rows = []
    for k in product(range(args.kmax + 1), repeat=args.r):
        rows.append((k, desing_value_exact(k, gammas)))
    if args.format == "json":
        print(json.dumps({
            "r": args.r,
            "gamma": [format_rational(g) for g in gammas],
            "values": [{"k": list(k), "value": format_rational(v)} for k, v in rows],
        }))
    else:
        for k, v in rows:
            print(",".join([str(x) for x in k] + [format_rational(v)]))
    return EXIT_OK


def cmd_coeffs(args):
    if not 1 <= args.r <= 6:
        return _usage("--r must be between 1 and 6")
    if args.format == "tex":
        print(combination(args.r).to_tex())
    else:
        print(json.dumps(expand_G(args.r).to_json()))
    return EXIT_OK


def cmd_eval(args):
    try:
        parts = [complex(p) for p in args.s.split(",")]
        gammas = [complex(Fraction(g)) for g in args.gamma.split(",")] \
            if args.gamma else [1.0] * len(parts)
    except ValueError as exc:
        return _usage(str(exc))
    if len(parts) not in (1, 2):
        return _usage("--s takes one or two comma-separated components")
    if len(gammas) != len(parts):
        return _usage("--gamma must match the number of arguments")
    try:
        if len(parts) == 1:
            result = desing1(parts[0])
        else:
            result = desing2(parts[0], parts[1], gammas[0], gammas[1], tol=args.tol)
    except ToleranceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_TOLERANCE
    except ValueError as exc:
        return _usage(str(exc))
    if result.err_estimate > args.tol:
        print(
            "error: tolerance not met (err_estimate %g > %g)"
            % (result.err_estimate, args.tol),
            file=sys.stderr,
        )
        return EXIT_TOLERANCE
    print(json.dumps(result.to_json()))
    return EXIT_OK


def cmd_verify(args):
    results = run_suite(args.suite)
    ok = True
    for cid, worst, passed in results:
        ok = ok and passed
        print("%-28s %s worst=%.3e" % (cid, "PASS" if passed else "FAIL", worst))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="deszeta",
        description="Twisted Bernoulli numbers and the desingularized "
        "multiple zeta-function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="table of Bernoulli numbers")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_bernoulli)

    p = sub.add_parser("twisted-bernoulli", help="table of twisted Bernoulli numbers")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_twisted_bernoulli)

    p = sub.add_parser("multi-bernoulli", help="table of twisted multiple Bernoulli numbers")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--a-list", dest="a_list", required=True)
    p.add_argument("--gamma", default=None)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_multi_bernoulli)

    p = sub.add_parser("desing-values", help="exact desingularized values at non-positive integers")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--gamma", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_desing_values)

    p = sub.add_parser("coeffs", help="coefficient table of the shifted-zeta combination")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=("json", "tex"), default="json")
    p.set_defaults(fn=cmd_coeffs)

    p = sub.add_parser("eval", help="numeric desingularized zeta value")
    p.add_argument("--s", required=True,
                   help="one or two comma-separated complex arguments")
    p.add_argument("--gamma", default=None)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--suite", choices=("all", "exact", "numeric"), default="all")
    p.set_defaults(fn=cmd_verify)

    return parser


def _fold_value_flags(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append("%s=%s" % (tok, argv[i + 1]))
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_fold_value_flags(argv))
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
