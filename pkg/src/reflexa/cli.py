"""Command-line entry point: ``reflexa``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter

from .ring_core import ParseError, parse_field
from .script import CommandStmt, Script, exit_code, parse_script, render, run

SHORTHANDS = ("gb", "resolve", "ext", "reflexive", "hom", "dual", "lemma", "annihilator",
              "colon", "kdim")

INCONCLUSIVE_LIMIT = 0.05


def _field(text):
    try:
        return parse_field(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reflexa", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = common(sub.add_parser("run", help="execute a script file ('-' for stdin)"))
    p.add_argument("script")
    p.add_argument("--field", type=_field, help="override the field of every ring")
    p.add_argument("--timing", action="store_true", help="include wall-clock times")

    p = common(sub.add_parser("paper-example", help="the determinantal cone example"))
    p.add_argument("--field", default="GF(32003)", type=_field)

    p = common(sub.add_parser("oracle", help="random finite-algebra consistency checks"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)

    for name in SHORTHANDS:
        p = common(sub.add_parser(name, help=f"shorthand for the '{name}' script command"))
        p.add_argument("args", nargs="+", help="command arguments (names, integers)")
        p.add_argument("-s", "--script", action="append", default=[],
                       help="file with definitions")
        p.add_argument("-e", "--define", action="append", default=[],
                       help="inline definitions")
        p.add_argument("--expect")
        p.add_argument("--field", type=_field)
    return ap


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _run_text(text: str, args, timing=False) -> int:
    script = parse_script(text)
    reports = run(script, field_override=args.field)
    print(render(reports, args.format, timing))
    return exit_code(reports)


def _oracle(args) -> int:
    from .finite_oracle import oracle_campaign
    seed = int(os.environ.get("REFLEXA_SEED", args.seed))
    results = oracle_campaign(seed, args.cases, args.jobs)
    counts = Counter(r["verdict"] for r in results)
    lemma_fail = sum(not r["lemma"] for r in results)
    rate = counts["inconclusive"] / max(1, len(results))
    ok = counts["inconsistent"] == 0 and lemma_fail == 0 and rate < INCONCLUSIVE_LIMIT
    summary = {"seed": seed, "cases": len(results), "consistent": counts["consistent"],
               "inconsistent": counts["inconsistent"], "inconclusive": counts["inconclusive"],
               "inconclusive_rate": rate, "lemma_failures": lemma_fail, "passed": ok}
    if args.format == "json":
        print(json.dumps({"summary": summary, "cases": results}, indent=2, sort_keys=True,
                         default=int))
    else:
        for r in results:
            print(f"[{r['verdict']:<12}] case {r['case']:>4}  {r['algebra']}  {r['module']}"
                  f"  dim={r['dim_module']} bidual={r['dim_bidual']} h_inv={r['h_invertible']}"
                  f" iso={r['iso']} lemma={r['lemma']}")
        print(" ".join(f"{k}={v}" for k, v in summary.items()))
    return 0 if ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "run":
            return _run_text(_read(args.script), args, args.timing)
        if args.cmd == "paper-example":
            from .scenario import paper_example
            rep = paper_example(args.field)
            print(rep.render(args.format))
            return 0 if rep.passed else 1
        if args.cmd == "oracle":
            return _oracle(args)
        parts = [_read(p) for p in args.script] + list(args.define)
        line = " ".join([args.cmd] + args.args)
        if args.expect is not None:
            line += f" expect {args.expect}"
        parts.append(line + ";")
        script = parse_script("\n".join(parts))
        keep = [st for st in script.statements[:-1] if not isinstance(st, CommandStmt)]
        reports = run(Script(tuple(keep) + script.statements[-1:]), field_override=args.field)
        print(render(reports, args.format))
        return exit_code(reports)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
