"""Command-line front end (``cmproof`` / ``python -m cmproof``).

Exit codes: ``check`` gives 0 on accept and 1 on reject, ``countermodel``
gives 0 when a model is found and 1 otherwise, and usage errors (bad
arguments, unreadable files) give 2.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import kripke
from .axioms import SchemeId, SchemeInstance, instantiate
from .corpus import check_script, run_corpus
from .errors import CMError, ParseError
from .hilbert import scheme_instance, translate_hilbert_to_nd
from .kernel_nd import CheckResult, Diagnostic, LogicMode, make_result
from .surface import format_proof, parse_bindings, parse_formula, parse_proof, parse_prop, show
from .syntax import classify

MODES = ["minimal", "int", "cm", "cm-plus"]
SEMANTICS = ["minimal", "int", "classical"]


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _describe(exc: CMError) -> str:
    if isinstance(exc, ParseError) and exc.line is not None:
        col = f":{exc.column}" if exc.column else ""
        return f"line {exc.line}{col}: {exc.message}"
    return str(exc)


def _print_result(result: CheckResult, as_json: bool) -> None:
    if as_json:
        print(json.dumps(result.as_dict(), indent=2))
        return
    label = f" {result.entry}" if result.entry else ""
    print(f"{result.verdict}{label} ({result.mode.label})")
    for d in result.diagnostics:
        print(f"  step {d.index}: {d.code}: {d.message}")


def cmd_check(args: argparse.Namespace) -> int:
    text = _read(args.file)
    mode = LogicMode.parse(args.mode) if args.mode else None
    try:
        script = parse_proof(text, name=Path(args.file).stem)
    except CMError as exc:
        result = make_result([Diagnostic(0, exc.code, _describe(exc))], LogicMode.MINIMAL if mode is None else mode, Path(args.file).stem)
        _print_result(result, args.json)
        return 1
    if mode is None:
        mode = script.mode
    if mode is None:
        raise _Usage(f"{args.file} declares no mode; pass --mode")
    result = check_script(script, mode)
    _print_result(result, args.json)
    return 0 if result.accepted else 1


def cmd_classify(args: argparse.Namespace) -> int:
    phi = parse_formula(args.formula)
    print(classify(phi).value)
    return 0


def cmd_instantiate(args: argparse.Namespace) -> int:
    if args.scheme.isdigit():
        bindings = parse_bindings(args.bindings, term_names=("t",))
        print(show(scheme_instance(int(args.scheme), bindings)))
        return 0
    try:
        sid = SchemeId(args.scheme)
    except ValueError:
        raise _Usage(f"unknown scheme {args.scheme!r}; expected 1-13 or one of {', '.join(s.value for s in SchemeId)}") from None
    b = parse_bindings(args.bindings)
    template = b.pop("phi", None)
    print(show(instantiate(SchemeInstance(sid, template, b))))
    return 0


def cmd_countermodel(args: argparse.Namespace) -> int:
    try:
        phi = parse_prop(args.formula)
    except ParseError:
        phi, _ = kripke.to_prop(parse_formula(args.formula))
    if args.max_worlds < 1:
        raise _Usage("--max-worlds must be at least 1")
    model = kripke.search_countermodel(phi, args.max_worlds, args.semantics)
    if args.json:
        print(json.dumps({"found": model is not None, "model": None if model is None else kripke.model_to_dict(model)}, indent=2))
    elif model is None:
        print(f"no countermodel with at most {args.max_worlds} world(s)")
    else:
        print(kripke.format_model(model), end="")
    return 0 if model is not None else 1


def cmd_corpus(args: argparse.Namespace) -> int:
    report = run_corpus(args.dir)
    print(report.to_json() if args.json else report.format())
    return 0 if report.passed else 1


def cmd_translate(args: argparse.Namespace) -> int:
    script = parse_proof(_read(args.file), name=Path(args.file).stem)
    if script.kernel != "hilbert":
        raise _Usage(f"{args.file} is not a Hilbert proof")
    mode = LogicMode.parse(args.mode) if args.mode else script.mode
    if mode is None:
        mode = LogicMode.MINIMAL
    print(format_proof(translate_hilbert_to_nd(script, mode)), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmproof", description="Proof checking for CM, third order arithmetic over intuitionistic logic.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check a .cmp proof file")
    c.add_argument("file")
    c.add_argument("--mode", choices=MODES)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("classify", help="atomic, arithmetical or general")
    c.add_argument("formula")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("instantiate", help="print an axiom instance")
    c.add_argument("scheme", help="1-13 for logical schemes, or a CM axiom name such as Compr2")
    c.add_argument("bindings", nargs="?", default="", help="e.g. 'phi(n) := n = n'")
    c.set_defaults(func=cmd_instantiate)

    c = sub.add_parser("countermodel", help="search for a propositional Kripke countermodel")
    c.add_argument("formula")
    c.add_argument("--max-worlds", type=int, default=3)
    c.add_argument("--semantics", choices=SEMANTICS, default="int")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_countermodel)

    c = sub.add_parser("corpus", help="bundled proof corpus")
    csub = c.add_subparsers(dest="action", required=True)
    r = csub.add_parser("run", help="check every corpus entry")
    r.add_argument("--json", action="store_true")
    r.add_argument("--dir", help="corpus directory (default: the bundled one)")
    r.set_defaults(func=cmd_corpus)

    c = sub.add_parser("translate", help="translate a Hilbert proof to natural deduction")
    c.add_argument("file")
    c.add_argument("--mode", choices=MODES)
    c.set_defaults(func=cmd_translate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"cmproof: {exc}", file=sys.stderr)
        return 2
    except CMError as exc:
        print(f"{exc.code}: {_describe(exc)}", file=sys.stderr)
        return 1 if args.command in ("instantiate", "translate") else 2


if __name__ == "__main__":
    sys.exit(main())
