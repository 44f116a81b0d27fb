"""Command line: evaluate terms, run the law suite and counterexamples, inspect stars and table models.

Exit status is 0 when every check came out as expected, 1 when a law or
model check did not, and 2 for usage, parse and input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import algebra
from .counterexamples import run_counterexamples
from .errors import MultirelError
from .fileio import dumps_env, load_env
from .star import star_trace
from .suite import SuiteConfig, run_suite
from .terms import Environment, eval_term

OK, FAILED, USAGE = 0, 1, 2

PROPERTIES = {"noncomplemented": algebra.has_noncomplemented_domain_element}


def cmd_eval(args) -> int:
    env = load_env(args.env)
    value = eval_term(args.term, env)
    if args.block:
        print(dumps_env(Environment(env.universe, {args.block: value})), end="")
    else:
        print(value)
    return OK


def cmd_laws(args) -> int:
    config = SuiteConfig(size=args.size, mode=args.mode, seed=args.seed,
                         samples=args.samples, filter=args.filter)
    report = run_suite(config)
    if not report.records:
        print(f"no law id starts with {args.filter!r}", file=sys.stderr)
        return USAGE
    print(report.to_json() if args.json else report.to_text(), end="")
    return OK if report.ok else FAILED


def cmd_counterexamples(args) -> int:
    report = run_counterexamples()
    print(report.to_json() if args.json else report.to_text(), end="")
    return OK if report.ok else FAILED


def cmd_star(args) -> int:
    env = load_env(args.env)
    trace = star_trace(env[args.rel])
    if args.trace:
        for k, x in enumerate(trace.iterates):
            print(f"x{k} = {x}")
        print(f"stable from x{trace.stabilized_at}")
    print(f"{args.rel}^* = {trace.limit}")
    return OK


def _show_model(alg: algebra.FiniteAlgebra, system: str) -> bool:
    verdict = algebra.check_table_axioms(alg, system)
    print(algebra.dumps_algebra(alg), end="")
    print(verdict.to_text(), end="")
    names = alg.carrier
    print("complemented: " + " ".join(names[i] for i in algebra.complemented(alg)))
    print("domain elements: " + " ".join(names[i] for i in algebra.domain_elements(alg)))
    print(f"<1p>0 = {names[algebra.diamond(alg, alg.one_par, alg.zero)]}")
    print()
    return verdict.ok


def cmd_models(args) -> int:
    if args.check:
        with open(args.check) as fh:
            alg = algebra.loads_algebra(fh.read())
        return OK if _show_model(alg, args.system) else FAILED
    if args.search:
        predicate = PROPERTIES[args.property] if args.property else None
        found = algebra.search_models(args.search, args.size, violate=args.violate,
                                      predicate=predicate, budget=args.budget)
        for alg in found:
            print(algebra.dumps_algebra(alg))
        print(f"# {len(found)} model(s) found")
        return OK
    if args.reify:
        alg = algebra.reify(1)
        ok = all(_show_model(alg, s) for s in ("ap-bi-Kleene", "dp-bi-Kleene"))
        return OK if ok else FAILED
    ok = True
    for alg in algebra.builtin_models():
        ok &= _show_model(alg, algebra.BUILTIN_CLAIMS[alg.name])
    return OK if ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multirel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term over the relations in a file")
    p.add_argument("--env", required=True, help="multirelation file")
    p.add_argument("--term", required=True)
    p.add_argument("--block", metavar="NAME", help="print a complete file binding the result to NAME")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("laws", help="check the law registry on generated multirelations")
    p.add_argument("--size", type=int, default=2)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--filter", default="", metavar="PREFIX")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("counterexamples", help="replay the stored witnesses")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counterexamples)

    p = sub.add_parser("star", help="compute R^* by fixpoint iteration")
    p.add_argument("--env", required=True)
    p.add_argument("--rel", required=True)
    p.add_argument("--trace", action="store_true", help="print every iterate")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("models", help="finite table models")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--builtin", action="store_true", help="check the built-in models (default)")
    group.add_argument("--check", metavar="FILE", help="check a table file against --system")
    group.add_argument("--search", metavar="SYSTEM", help="search for models of SYSTEM")
    group.add_argument("--reify", action="store_true", help="tabulate multirelations over one element")
    p.add_argument("--system", choices=sorted(algebra.SYSTEMS), default="dp-trioid")
    p.add_argument("--size", type=int, default=3, help="carrier size for --search")
    p.add_argument("--violate", metavar="LAW_ID")
    p.add_argument("--property", choices=sorted(PROPERTIES))
    p.add_argument("--budget", type=int, default=10)
    p.set_defaults(func=cmd_models)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (MultirelError, ValueError, KeyError, OSError) as exc:
        print(f"multirel: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
