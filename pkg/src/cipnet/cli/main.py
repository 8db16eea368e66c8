"""Command-line entry point (``cipnet`` and ``python -m cipnet``)."""

from __future__ import annotations

import argparse
import sys
import uuid
from collections.abc import Sequence
from typing import Optional

import structlog

from cipnet import __version__
from cipnet.cli.commands import COMMANDS
from cipnet.cli.commands.base import CommandParser, report_failure
from cipnet.cli.exceptions import InvalidArguments
from cipnet.config.settings import configure_logging

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="cipnet",
        description="Core/intermediate/peripheral analysis of undirected networks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, help="Stderr log level."
    )
    parser.add_argument("--log-format", choices=("json", "console"))
    subparsers = parser.add_subparsers(dest="command_name", required=True)
    for command_class in COMMANDS:
        command = command_class()
        sub = subparsers.add_parser(
            command.name, help=command.help, description=command.help
        )
        command.add_arguments(sub)
        sub.set_defaults(command=command)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        options = parser.parse_args(argv)
    except InvalidArguments as exc:
        configure_logging()
        return report_failure(exc, sys.stderr)

    configure_logging(options.log_level, options.log_format)
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(
        run_id=uuid.uuid4().hex, command=options.command_name
    )
    return options.command.execute(options)


if __name__ == "__main__":
    raise SystemExit(main())
