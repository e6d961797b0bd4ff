"""``ssg`` command-line entry point."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import NoReturn

import structlog

from ..application.commands import (
    Command,
    CommandResult,
    EvaluateCommand,
    EvaluateCommandHandler,
    GermCommand,
    GermCommandHandler,
    NucleusCommand,
    NucleusCommandHandler,
    PhiCommand,
    PhiCommandHandler,
    TransportCommand,
    TransportCommandHandler,
    VerifyCommand,
    VerifyCommandHandler,
    WordProblemCommand,
    WordProblemCommandHandler,
)
from ..application.services.verification_service import SUITES
from ..core.config import get_settings, setup_logging
from ..core.exceptions import BoundExceededError, SSGError
from ..infrastructure.loader import FixtureResolver

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BOUNDS = 2
EXIT_USAGE = 3

_GREEN = "\033[32m"
_RED = "\033[31m"
_YELLOW = "\033[33m"
_RESET = "\033[0m"


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the parse/usage code instead of argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subparser per command."""
    parser = _Parser(prog="ssg", description="Self-similar groups and their Röver–Nekrashevych groups.")
    parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format.")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        type=str.upper,
        default=None,
        help="Override SSG_LOG_LEVEL.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    nucleus = sub.add_parser("nucleus", help="Compute the nucleus of a contracting group.")
    nucleus.add_argument("group", help="Built-in group name or group file.")
    nucleus.add_argument("--max-size", type=int, default=None)
    nucleus.add_argument("--max-depth", type=int, default=None)

    wp = sub.add_parser("wp", help="Decide whether a word is trivial.")
    wp.add_argument("group")
    wp.add_argument("word", help="Word such as a.b'.c or id.")

    ev = sub.add_parser("eval", help="Image of a rational point.")
    ev.add_argument("group")
    ev.add_argument("point", help="Point in alpha(beta) syntax, e.g. 0(01).")
    source = ev.add_mutually_exclusive_group(required=True)
    source.add_argument("--element", help="Built-in element name or RN-element file.")
    source.add_argument("--word", help="Global group element as a word.")

    germ = sub.add_parser("germ", help="Germ signature at a fixed rational point.")
    germ.add_argument("group")
    germ.add_argument("element")
    germ.add_argument("point")
    germ.add_argument("--cap", type=int, default=None, help="Largest block index tried.")

    transport = sub.add_parser("transport", help="Element sending each p_i to q_i.")
    transport.add_argument("group")
    transport.add_argument(
        "--pair", nargs=2, action="append", required=True, metavar=("P", "Q"), default=None
    )
    transport.add_argument(
        "--mover", action="append", default=None, help="Mover for the matching pair (best-effort search when omitted)."
    )

    ph = sub.add_parser("phi", help="Embed an element into the fixator of E'.")
    ph.add_argument("group")
    ph.add_argument("element")
    ph.add_argument("--point", action="append", required=True, help="A point of S (repeatable).")

    verify = sub.add_parser("verify", help="Run a verification suite.")
    verify.add_argument("suite", choices=[*SUITES, "all"])
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--cases", type=int, default=None)
    verify.add_argument("--group", default=None, help="Override the suite's default group.")
    verify.add_argument("--point", action="append", default=None, help="Override the suite's points.")
    return parser


def _dispatch(args: argparse.Namespace) -> CommandResult:
    resolver = FixtureResolver()
    command: Command
    if args.command == "nucleus":
        command = NucleusCommand(args.group, args.max_size, args.max_depth)
        return NucleusCommandHandler(resolver).handle(command)
    if args.command == "wp":
        return WordProblemCommandHandler(resolver).handle(WordProblemCommand(args.group, args.word))
    if args.command == "eval":
        command = EvaluateCommand(args.group, args.point, args.element, args.word)
        return EvaluateCommandHandler(resolver).handle(command)
    if args.command == "germ":
        command = GermCommand(args.group, args.element, args.point, args.cap)
        return GermCommandHandler(resolver).handle(command)
    if args.command == "transport":
        pairs = tuple((p, q) for p, q in args.pair)
        command = TransportCommand(args.group, pairs, tuple(args.mover or ()))
        return TransportCommandHandler(resolver).handle(command)
    if args.command == "phi":
        command = PhiCommand(args.group, args.element, tuple(args.point))
        return PhiCommandHandler(resolver).handle(command)
    command = VerifyCommand(args.suite, args.seed, args.cases, args.group, tuple(args.point or ()))
    return VerifyCommandHandler(resolver).handle(command)


def exit_code_for(exc: Exception) -> int:
    """Map an error to the documented exit code."""
    if isinstance(exc, BoundExceededError):
        return EXIT_BOUNDS
    if isinstance(exc, ValueError):
        return EXIT_USAGE
    return EXIT_CHECK_FAILED


def _colorize(text: str, exit_code: int) -> str:
    color = {EXIT_OK: _GREEN, EXIT_CHECK_FAILED: _RED}.get(exit_code, _YELLOW)
    lines = text.split("\n")
    lines[-1] = f"{color}{lines[-1]}{_RESET}"
    return "\n".join(lines)


def _emit(result: CommandResult, output_format: str, use_color: bool) -> None:
    if output_format == "json":
        print(json.dumps(result.data, indent=2, sort_keys=True, ensure_ascii=False))
    elif use_color:
        print(_colorize(result.text, result.exit_code))
    else:
        print(result.text)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    settings = get_settings()
    if args.log_level:
        settings = settings.model_copy(update={"log_level": args.log_level})
    setup_logging(settings)
    use_color = settings.color and sys.stdout.isatty()

    try:
        result = _dispatch(args)
    except (SSGError, ValueError) as exc:
        code = exit_code_for(exc)
        logger.warning("Command failed", command=args.command, error=str(exc), exit_code=code)
        if args.format == "json":
            document = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
            print(json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return code

    _emit(result, args.format, use_color)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
