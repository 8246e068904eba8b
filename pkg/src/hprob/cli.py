"""Command line front end: ``hprob <subcommand> --space FILE [...] [--json]``.

Event arguments take a registered event name or an inline comma-separated
list of atom ids; ``{}`` denotes the empty event.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 query error,
5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import errors
from .hyperbolic import ONE, HNum, classify
from .inference import (bayes, chain_mult, cond, independence, joint_independence,
                        mult_theorem, total_probability)
from .io import load
from .space import ProbSpace
from .verify import DEFAULT_CAP, verify

EXIT_CODES = {
    errors.PARSE: 2,
    errors.VALIDATION: 3,
    errors.QUERY: 4,
    errors.VERIFICATION: 5,
}


@dataclass
class QueryResult:
    value: HNum
    case_tags: list[str] = field(default_factory=list)
    residuals: list[HNum] = field(default_factory=list)
    details: dict[str, HNum] = field(default_factory=dict)

    def render(self) -> str:
        lines = [str(self.value)]
        lines += [f"{name}: {v}" for name, v in self.details.items()]
        lines += [f"case: {tag}" for tag in self.case_tags]
        lines += [f"residual: {r}" for r in self.residuals]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        def both(z):
            return {"idempotent": z.idempotent_str(), "cartesian": z.cartesian_str()}
        return {
            "value": both(self.value),
            "details": {name: both(v) for name, v in self.details.items()},
            "case_tags": list(self.case_tags),
            "residuals": [both(r) for r in self.residuals],
        }


def resolve_event(space: ProbSpace, text: str) -> frozenset:
    if text in space.named_events:
        return space.named_events[text]
    if text.strip() in ("{}", ""):
        return frozenset()
    ids = [t.strip() for t in text.split(",")]
    if not all(ids):
        raise errors.UnknownEvent(f"malformed event {text!r}")
    try:
        return space.event(ids)
    except errors.UnknownAtom:
        if len(ids) == 1:
            raise errors.UnknownEvent(f"{text!r} is neither an event name nor an atom") from None
        raise


def _flag(value: bool) -> str:
    return "true" if value else "false"


def run_query(space: ProbSpace, args: argparse.Namespace) -> QueryResult:
    ev = lambda text: resolve_event(space, text)  # noqa: E731
    cmd = args.command

    if cmd == "validate":
        return QueryResult(space.total_mass,
                           [f"regime={space.regime.value}", f"atoms={len(space.atoms)}"])

    if cmd == "prob":
        value = space.measure(ev(args.event))
        return QueryResult(value, [f"class={classify(value).value}"])

    if cmd == "cond":
        value, case = cond(space, ev(args.event), ev(args.given))
        return QueryResult(value, [case.tag.value])

    if cmd == "mult":
        a, b = ev(args.event), ev(args.given)
        lhs, rhs = mult_theorem(space, a, b)
        return QueryResult(lhs, [cond(space, a, b)[1].tag.value], [lhs - rhs], {"rhs": rhs})

    if cmd == "chain":
        lhs, rhs, condition = chain_mult(space, [ev(t) for t in args.event])
        return QueryResult(lhs, [f"chain-{condition.value}"], [lhs - rhs], {"rhs": rhs})

    if cmd == "indep":
        a, b = ev(args.a), ev(args.b)
        report = independence(space, a, b)
        tags = [report.case.value,
                "independent" if report.mutual else "dependent",
                f"a-indep-b={_flag(report.a_indep_b)}",
                f"b-indep-a={_flag(report.b_indep_a)}",
                f"product={_flag(report.product_holds)}"]
        return QueryResult(space.measure(a & b), tags,
                           details={"product": space.measure(a) * space.measure(b)})

    if cmd == "joint":
        sets = [ev(t) for t in args.event]
        jointly, pairwise = joint_independence(space, sets)
        product = ONE
        for s in sets:
            product = product * space.measure(s)
        return QueryResult(space.measure(frozenset.intersection(*sets)),
                           [f"jointly={_flag(jointly)}", f"pairwise={_flag(pairwise)}"],
                           details={"product": product})

    if cmd == "total":
        a = ev(args.event)
        value = total_probability(space, a, [ev(t) for t in args.fse])
        measure = space.measure(a)
        return QueryResult(value, [], [value - measure], {"measure": measure})

    if cmd == "bayes":
        result = bayes(space, ev(args.hypothesis), ev(args.event), [ev(t) for t in args.fse])
        return QueryResult(result.posterior, [result.branch.value], [result.residual])

    raise errors.HProbError(f"unknown command {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hprob", description="Query finite hyperbolic-valued probability spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--space", required=True, help="path to a JSON space file")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    command("validate", "check the axioms and report the regime")
    command("prob", "measure of an event").add_argument("--event", required=True)
    p = command("cond", "conditional probability P(A|B)")
    p.add_argument("--event", required=True)
    p.add_argument("--given", required=True)
    p = command("mult", "multiplication theorem for A given B")
    p.add_argument("--event", required=True)
    p.add_argument("--given", required=True)
    command("chain", "generalized multiplication theorem").add_argument(
        "--event", action="append", required=True, help="repeat, in chain order")
    p = command("indep", "independence analysis of two events")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    command("joint", "joint vs pairwise independence").add_argument(
        "--event", action="append", required=True, help="repeat for each event")
    p = command("total", "law of total probability")
    p.add_argument("--event", required=True)
    p.add_argument("--fse", action="append", required=True, help="repeat for each part")
    p = command("bayes", "posterior P(H|A) over a fundamental system")
    p.add_argument("--hypothesis", required=True)
    p.add_argument("--event", required=True)
    p.add_argument("--fse", action="append", required=True, help="repeat for each part")
    p = command("verify", "run the full law suite")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of atoms")
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        space = load(args.space)
        if args.command == "verify":
            report = verify(space, cap=args.cap, samples=args.samples, seed=args.seed)
            if args.json:
                out.write(json.dumps(report.to_dict(), indent=2) + "\n")
            else:
                out.write(report.render())
            return 0 if report.all_pass else EXIT_CODES[errors.VERIFICATION]
        result = run_query(space, args)
    except errors.HProbError as exc:
        if args.json:
            out.write(json.dumps({"error": {"category": exc.category,
                                            "type": type(exc).__name__,
                                            "message": str(exc)}}, indent=2) + "\n")
        print(f"hprob: {exc.category}: {exc}", file=sys.stderr)
        return EXIT_CODES[exc.category]
    if args.json:
        out.write(json.dumps(result.to_dict(), indent=2) + "\n")
    else:
        out.write(result.render())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
