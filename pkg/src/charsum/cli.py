"""Command line: ``charsum eval | verify | construct``.

Exit codes: 0 when everything agrees, 1 for usage or input errors, 2 when a
closed form disagrees with brute force or a construction misses its target.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import constructions
from .config import field_to_json, load_text, parse_element, parse_field, presentation_to_json
from .errors import CharsumError, OracleMismatch, ParseError
from .ring import cyclotomic, prime_field
from .suites import SUITES, run_suite
from .sums import sigma_auto, sigma_brute

EXIT_OK, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, encoding="utf-8") as fh:
        return fh.read(), path


# ---------------------------------------------------------------------- eval

def cmd_eval(args) -> int:
    text, source = _read(args.config)
    cfg = load_text(text, source)
    mono = args.monomial or cfg.monomial
    if not mono:
        raise ParseError(f"{source}: no monomial given (config \"monomial\" or --monomial)")
    Pi = cfg.group(args.max_order)
    report = sigma_auto(Pi, mono, brute=not args.no_brute)
    out = report.to_dict()
    if report.closed is None and report.brute is None:
        # no closed form applies; brute force is the only value available
        out["brute"] = str(sigma_brute(Pi, mono))
        out["note"] = "no closed form applies; brute force computed despite --no-brute"
    out["field"] = field_to_json(cfg.field)
    out["presentation"] = cfg.presentation.name or "custom"
    out["monomial"] = str(cfg.presentation.monomial(mono))
    out["consistent"] = report.consistent
    _emit(args, out, _eval_text)
    return EXIT_OK if report.consistent else EXIT_DISAGREE


def _eval_text(out: dict) -> str:
    lines = [f"sum over |Pi| = {out['order']} of {out['monomial']}",
             f"  path:   {out['path']}",
             f"  closed: {out['closed']}",
             f"  brute:  {out['brute']}",
             f"  agree:  {out['agree']}"]
    for name, ok in out["checks"].items():
        lines.append(f"  check {name}: {'pass' if ok else 'FAIL'}")
    if "note" in out:
        lines.append(f"  note: {out['note']}")
    return "\n".join(lines)


def _emit(args, out: dict, text_renderer) -> None:
    if args.format == "text":
        print(text_renderer(out))
    else:
        print(_dump(out))


# -------------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n, seed=args.seed, max_order=args.max_order) for n in names]
    if args.format == "json":
        print(_dump({r.name: {"ok": r.ok, "counts": r.counts, "info": r.info,
                              "failures": r.failures} for r in results}))
    else:
        for r in results:
            print(f"{r.name}: {'PASS' if r.ok else 'FAIL'}")
            print("\n".join(r.lines()))
    return EXIT_OK if all(r.ok for r in results) else EXIT_DISAGREE


# ----------------------------------------------------------------- construct

def cmd_construct(args) -> int:
    kind = args.kind
    if args.field:
        fld = parse_field(json.loads(args.field) if args.field.lstrip().startswith("{")
                          else args.field)
    elif kind == "lie":
        fld = prime_field(_need(args, "p"))
    elif kind == "cyclic":
        fld = cyclotomic(_need(args, "m"))
    else:
        fld = cyclotomic(_chain(args)[-1])
    r = parse_element(fld, args.target)
    if kind == "lie":
        c = constructions.construct_lie(_need(args, "p"), _need(args, "n"), _need(args, "k"), r)
    elif kind == "cyclic":
        c = constructions.construct_cyclic(_need(args, "m"), _need(args, "n"), r)
    else:
        c = constructions.construct_abelian(_chain(args), _need(args, "n"), r)
    achieved = c.brute()
    out = {
        "kind": c.kind,
        "field": field_to_json(fld),
        "presentation": presentation_to_json(c.presentation),
        "params": {k: _jsonable(v) for k, v in c.params.items()},
        "monomial": str(c.monomial),
        "target": str(c.target),
        "predicted": str(c.predicted),
        "achieved": str(achieved),
        "order": len(c.group),
        "characters": [{k: str(v) for k, v in chi.as_dict().items()} for chi in c.group.elements],
        "ok": achieved == c.target and c.predicted == c.target,
    }
    _emit(args, out, _construct_text)
    return EXIT_OK if out["ok"] else EXIT_DISAGREE


def _construct_text(out: dict) -> str:
    return "\n".join([
        f"{out['kind']} construction on {out['presentation']['name']}, |Pi| = {out['order']}",
        f"  monomial:  {out['monomial']}",
        f"  target:    {out['target']}",
        f"  predicted: {out['predicted']}",
        f"  achieved:  {out['achieved']}",
        f"  ok:        {out['ok']}",
    ])


def _need(args, name: str) -> int:
    v = getattr(args, name)
    if v is None:
        raise ParseError(f"--{name} is required for --kind {args.kind}")
    return v


def _chain(args) -> list[int]:
    if not args.chain:
        raise ParseError("--chain is required for --kind abelian")
    try:
        return [int(x) for x in args.chain.split(",")]
    except ValueError:
        raise ParseError(f"cannot read chain {args.chain!r}") from None


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    if hasattr(v, "as_dict"):
        return {k: str(x) for k, x in v.as_dict().items()}
    return str(v)


# ---------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="charsum", description="Exact sums of finite groups of characters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate the sum for a JSON config")
    ev.add_argument("config", help="path to the config, or - for stdin")
    ev.add_argument("--monomial", help="override the config's monomial")
    ev.add_argument("--no-brute", action="store_true", help="skip the brute-force oracle")
    ev.add_argument("--max-order", type=int, help="cap on |Pi| during closure")
    ev.add_argument("--format", choices=("json", "text"), default="json")
    ev.set_defaults(func=cmd_eval)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)} or all")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--max-order", type=int, default=128)
    ve.add_argument("--format", choices=("json", "text"), default="text")
    ve.set_defaults(func=cmd_verify)

    co = sub.add_parser("construct", help="realize a prescribed value of the sum")
    co.add_argument("--kind", required=True, choices=("lie", "cyclic", "abelian"))
    co.add_argument("--target", required=True, help="field element, e.g. 3 or 1+zeta")
    co.add_argument("--field", help="e.g. F_5, F_2^2, Q(zeta_4) or a JSON field object")
    co.add_argument("--p", type=int)
    co.add_argument("--n", type=int)
    co.add_argument("--k", type=int)
    co.add_argument("--m", type=int)
    co.add_argument("--chain", help="invariant factors, e.g. 2,4")
    co.add_argument("--format", choices=("json", "text"), default="json")
    co.set_defaults(func=cmd_construct)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleMismatch as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (CharsumError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
