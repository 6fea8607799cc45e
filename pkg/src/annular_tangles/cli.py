"""Command-line entry point: ``annular-tangles <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import ConjectureViolation, TangleError
from .matchings import SignSequence, enumerate_matchings, from_signs


def _matching(signs: str, m: int, n: int):
    return from_signs(SignSequence(m, n, signs))


def cmd_enumerate(args) -> int:
    for mch in enumerate_matchings(args.m, args.n):
        if args.format == "json":
            print(json.dumps(mch.to_json()))
        else:
            cups = " ".join(f"{a}-{b}" for a, b in mch.cups) or "-"
            rays = " ".join(map(str, mch.rays)) or "-"
            print(f"{mch.signs}  cups: {cups}  rays: {rays}")
    return 0


def cmd_extdim(args) -> int:
    from .diagram import ext_poincare

    poly = ext_poincare(_matching(args.alpha, args.m, args.n), _matching(args.beta, args.m, args.n))
    print(poly if args.poincare else poly.total())
    return 0


def _element(text: str, m: int, n: int):
    from .arc_algebra import ArcAlgebraElement, BasisDiagram

    obj = json.loads(text)
    items = obj if isinstance(obj, list) else [obj]
    coeffs = {}
    for item in items:
        b = BasisDiagram(
            _matching(item["alpha"], m, n), _matching(item["beta"], m, n), tuple(item["labels"])
        )
        coeffs[b] = coeffs.get(b, 0) + int(item.get("coeff", 1))
    return ArcAlgebraElement(m, n, coeffs)


def cmd_multiply(args) -> int:
    from .arc_algebra import multiply

    x, y = _element(args.x, args.m, args.n), _element(args.y, args.m, args.n)
    for line in multiply(x, y, check_orders=args.check_orders).to_json_lines():
        print(line)
    return 0


def cmd_check(args) -> int:
    from .arc_algebra import SUITES

    res = SUITES[args.suite](args.m, args.n)
    summary = {"suite": res.suite, "m": res.m, "n": res.n, "passed": res.passed, "checked": res.checked}
    print(json.dumps(summary))
    if not res.passed:
        print(json.dumps({"counterexample": res.counterexample}))
        return 1
    return 0


def cmd_verify_relations(args) -> int:
    from .ktheory import satisfying_signs, verify_relations
    from .relations import RuleId

    order = [rid.value for rid in RuleId]
    results = sorted(verify_relations(args.max_size), key=lambda r: order.index(r.rule))
    ok = satisfying_signs(results)
    if args.json:
        for r in results:
            print(json.dumps({
                "rule": r.rule, "label": r.label, "instances": r.instances,
                "pass": {str(e): c for e, c in r.passes.items()},
            }))
        print(json.dumps({"satisfying_epsilon": ok}))
    else:
        print(f"{'relation':<20} {'family':<40} {'count':>6} {'eps=+1':>7} {'eps=-1':>7}")
        for r in results:
            flags = ["ok" if r.passes[e] == r.instances else f"FAIL {r.instances - r.passes[e]}" for e in (1, -1)]
            print(f"{r.rule:<20} {r.label:<40} {r.instances:>6} {flags[0]:>7} {flags[1]:>7}")
        print("satisfying epsilon:", " ".join(f"{e:+d}" for e in ok) if ok else "none")
    if not ok:
        failing = [r.rule for r in results if any(r.passes[e] != r.instances for e in r.passes)]
        print("no rotation sign satisfies: " + ", ".join(failing), file=sys.stderr)
        return 1
    return 0


def cmd_decat(args) -> int:
    from .ktheory import psi_hat
    from .tangles import parse_word

    mat = psi_hat(parse_word(args.word), args.m)
    for row in mat.tolist():
        print(json.dumps(row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="annular-tangles", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def mn(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("enumerate", help="list Cross(m, n)")
    mn(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    p.set_defaults(func=cmd_enumerate, format="text")

    p = sub.add_parser("extdim", help="dimension of Ext between two irreducibles")
    mn(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--poincare", action="store_true", help="print the graded dimension in q")
    p.set_defaults(func=cmd_extdim)

    p = sub.add_parser("multiply", help="product in the annular arc algebra")
    mn(p)
    p.add_argument("--x", required=True, help="basis-diagram JSON, or a list of them with coeff")
    p.add_argument("--y", required=True)
    p.add_argument("--check-orders", action="store_true", help="compare every admissible surgery order")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("check", help="exhaustive property suite")
    mn(p)
    p.add_argument("--suite", required=True, choices=["assoc", "unit", "order", "degree", "rank"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-relations", help="matrix check of the tangle relations")
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_relations)

    p = sub.add_parser("decat", help="weight-space matrix of a tangle word")
    p.add_argument("--word", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_decat)
    return parser


_VALUE_FLAGS = ("--alpha", "--beta", "--word", "--x", "--y")


def _glue_values(argv: Sequence[str]) -> list[str]:
    # sign strings such as "-+" would otherwise be read as options
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    if getattr(args, "m", 0) < 0 or getattr(args, "n", 0) < 0:
        parser.error("--m and --n must be non-negative")
    try:
        return args.func(args)
    except ConjectureViolation as exc:
        print(json.dumps({"counterexample": json.loads(str(exc))}))
        return 1
    except (TangleError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"annular-tangles: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
