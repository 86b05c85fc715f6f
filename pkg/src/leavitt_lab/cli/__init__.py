"""Command-line front end: expression parser, REPL and batch runner."""

from .commands import Session, run_command
from .parser import ParseError, evaluate, parse, parse_and_evaluate

__all__ = ["ParseError", "Session", "evaluate", "parse", "parse_and_evaluate", "run_command"]
