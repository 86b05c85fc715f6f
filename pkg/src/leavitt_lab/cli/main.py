"""Entry point for the ``leavitt-lab`` executable.

Exit codes: 0 success, 1 evaluation error, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import LeavittError
from ..rings import Ring
from .commands import Session
from .parser import ParseError

EXIT_OK, EXIT_EVAL, EXIT_PARSE = 0, 1, 2


def _ring(text: str) -> Ring:
    try:
        return Ring.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leavitt-lab", description="Exact computation in L_2 and Thompson's group V.")
    sub = ap.add_subparsers(dest="mode", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", type=_ring, default=Ring.parse("z"), help="z, q or z/<n> (default z)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_parser("repl", parents=[common], help="interactive session")
    run = sub.add_parser("run", parents=[common], help="run a script of commands")
    run.add_argument("script")
    ev = sub.add_parser("eval", parents=[common], help="print the normal form of one expression")
    ev.add_argument("expr")
    return ap


def _error_code(exc: Exception) -> int:
    return EXIT_PARSE if isinstance(exc, ParseError) else EXIT_EVAL


def run_script(lines, session: Session, as_json: bool, out=None, err=None) -> int:
    """Run commands in order and stop at the first failure."""
    out = out or sys.stdout
    err = err or sys.stderr
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            res = session.run(line)
        except (LeavittError, ValueError) as exc:
            if isinstance(exc, ParseError):
                exc = ParseError(exc.message, exc.column, lineno)
            print(f"error: {exc}", file=err)
            return _error_code(exc)
        if as_json:
            print(json.dumps({"command": line, "result": res.data}, sort_keys=True), file=out)
        else:
            print(f"> {line}", file=out)
            if res.text:
                print(res.text, file=out)
    return EXIT_OK


def repl(session: Session, as_json: bool) -> int:
    interactive = sys.stdin.isatty()
    while True:
        try:
            line = input("leavitt> " if interactive else "")
        except EOFError:
            return EXIT_OK
        if line.strip() in {"quit", "exit"}:
            return EXIT_OK
        if not line.strip() or line.strip().startswith("#"):
            continue
        try:
            print(session.run(line).render(as_json))
        except (LeavittError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    session = Session(ring=args.ring)
    if args.mode == "repl":
        return repl(session, args.json)
    if args.mode == "run":
        try:
            with open(args.script, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_EVAL
        return run_script(lines, session, args.json)
    try:
        res = session.run("normal " + args.expr)
    except (LeavittError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _error_code(exc)
    print(res.render(args.json))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
