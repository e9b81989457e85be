"""Command-line front end.

Exit codes: 0 holds/success, 1 fails, 2 usage or parse error, 3 unknown at
the bound, 4 precondition violation.  Results go to stdout, diagnostics to
stderr.  Term arguments use the term grammar; ``@path`` reads the argument
from a file instead.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import (AlgebraError, CapError, EvalError, ParseError,
                     PreconditionError, RejectedSolution)
from .finsemi import load_semigroup
from .pointlikes import (compute_pointlikes, parse_system, sl_checker,
                         transform_solution, with_identity)
from .superpose import beta_prime, phi
from .terms import eval_term, parse_term, to_text
from .theta import ThetaContext
from .truncation import K_SIDE, D_SIDE, check_identity, prefix_k, suffix_k
from .verdict import Verdict
from . import selftest

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3
EXIT_PRECONDITION = 4


def _argument_text(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text()
    return arg


def _load_semigroup_arg(path: str, need_generators: bool = True):
    semigroup, gens = load_semigroup(Path(path).read_text())
    if need_generators and gens is None:
        raise ParseError(f"semigroup file {path!r} declares no generators")
    return semigroup, gens


def _verdict_exit(verdict: Verdict) -> int:
    if verdict.holds:
        return EXIT_OK
    if verdict.unknown:
        return EXIT_UNKNOWN
    return EXIT_FAILS


def _print_verdict(verdict: Verdict):
    print(verdict.status)
    if verdict.witness is not None:
        print(f"witness: {verdict.witness}")
    if verdict.unknown and verdict.bound is not None:
        print(f"bound: {verdict.bound}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kappaterms",
        description="Symbolic computation with terms over finite semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term in a semigroup")
    p.add_argument("-S", "--semigroup", required=True, metavar="FILE")
    p.add_argument("term")

    for name in ("prefix", "suffix"):
        p = sub.add_parser(name, help=f"stable length-k {name} of a term")
        p.add_argument("-k", type=int, required=True)
        p.add_argument("term")

    p = sub.add_parser("phi", help="window image of a term")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("term")

    p = sub.add_parser("beta", help="pair-alphabet image of a term")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("term")

    p = sub.add_parser("theta", help="value-preserving transform of a term")
    p.add_argument("-S", "--semigroup", required=True, metavar="FILE")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("term")

    p = sub.add_parser("check", help="decide an identity over a pseudovariety")
    p.add_argument("-V", "--variety", required=True,
                   choices=["Kk", "Dk", "K", "D", "LI", "Sl"])
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-L", type=int, default=None, help="unused; reserved")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = sub.add_parser("pointlikes", help="maximal pointlike subsets")
    p.add_argument("-S", "--semigroup", required=True, metavar="FILE")
    p.add_argument("-V", "--variety", required=True, choices=["Dk", "Kk"])
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("transform", help="rewrite a level-k solution")
    p.add_argument("-S", "--semigroup", required=True, metavar="FILE")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--system", required=True, metavar="FILE")
    p.add_argument("-L", type=int, default=None, help="level bound (default 2k)")

    p = sub.add_parser("selftest", help="run the condensed oracle suites")
    p.add_argument("--seed", type=int, default=20240901)

    return parser


def run(argv) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _dispatch(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except RejectedSolution as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        if exc.verdict is not None:
            _print_verdict(exc.verdict)
        return EXIT_FAILS
    except (ParseError, AlgebraError, EvalError, CapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "eval":
        semigroup, gens = _load_semigroup_arg(args.semigroup)
        term = parse_term(_argument_text(args.term))
        s1, gens1 = with_identity(semigroup, gens)
        print(s1.name_of(eval_term(term, s1, gens1)))
        return EXIT_OK

    if args.command in ("prefix", "suffix"):
        if args.k < 1:
            raise PreconditionError("k must be positive")
        term = parse_term(_argument_text(args.term))
        op = prefix_k if args.command == "prefix" else suffix_k
        print(op(term, args.k))
        return EXIT_OK

    if args.command == "phi":
        if args.k < 1:
            raise PreconditionError("k must be positive")
        term = parse_term(_argument_text(args.term))
        print(to_text(phi(term, args.k)))
        return EXIT_OK

    if args.command == "beta":
        if args.k < 1:
            raise PreconditionError("k must be positive")
        term = parse_term(_argument_text(args.term))
        print(to_text(beta_prime(term, args.k)))
        return EXIT_OK

    if args.command == "theta":
        semigroup, gens = _load_semigroup_arg(args.semigroup)
        ctx = ThetaContext(semigroup, gens, args.k)
        term = parse_term(_argument_text(args.term))
        print(to_text(ctx.theta_prime(term)))
        return EXIT_OK

    if args.command == "check":
        lhs = parse_term(_argument_text(args.lhs), k=args.k)
        rhs = parse_term(_argument_text(args.rhs), k=args.k)
        if args.variety == "Sl":
            verdict = sl_checker().check(lhs, rhs)
        else:
            if args.variety in ("Kk", "Dk") and (args.k is None or args.k < 1):
                raise ParseError(f"{args.variety} needs -k")
            verdict = check_identity(args.variety, lhs, rhs, k=args.k)
        _print_verdict(verdict)
        return _verdict_exit(verdict)

    if args.command == "pointlikes":
        if args.k < 1:
            raise PreconditionError("k must be positive")
        semigroup, gens = _load_semigroup_arg(args.semigroup)
        kind = D_SIDE if args.variety == "Dk" else K_SIDE
        classes = compute_pointlikes(semigroup, gens, kind, args.k)
        for witness, values in classes:
            names = " ".join(sorted(semigroup.name_of(v) for v in values))
            print(f"{witness}: {{{names}}}")
        return EXIT_OK

    if args.command == "transform":
        semigroup, gens = _load_semigroup_arg(args.semigroup)
        system, eta_k = parse_system(Path(args.system).read_text(),
                                     semigroup, gens)
        eta, report = transform_solution(system, semigroup, gens, eta_k,
                                         args.k, sl_checker(), bound=args.L)
        for x in system.variables:
            print(f"{x} = {to_text(eta[x])}")
        print(report.text())
        return _verdict_exit(report.overall())

    if args.command == "selftest":
        return EXIT_OK if selftest.run_selftest(args.seed) else EXIT_FAILS

    raise AssertionError(args.command)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
