"""Command plumbing shared by every subcommand.

Mirrors the management-command shape: a class with ``name``, ``help``,
``add_arguments(parser)`` and ``handle(options)``.  ``execute`` is the
single place where errors become a one-line JSON diagnostic on stderr
and a process exit status:

- ``CipnetError``: its own ``code`` and ``exit_status`` (3 or 4).
- ``pydantic.ValidationError``: ``invalid_config``, exit 3.
- ``OSError``: ``io_error``, exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import IO, Any, NoReturn, Optional

import structlog
from pydantic import ValidationError

from cipnet.cli.dtos import STDIO, AnalyzeConfig
from cipnet.cli.exceptions import InvalidArguments, InvalidConfig
from cipnet.graphs.models import Graph
from cipnet.graphs.parsers import parse_edge_list, read_graphml
from cipnet.shared.domain.errors import CipnetError

logger = structlog.get_logger(__name__)

IO_ERROR_EXIT_STATUS = 2


class CommandParser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting on bad input."""

    def error(self, message: str) -> NoReturn:
        raise InvalidArguments(f"{self.prog}: {message}")


def diagnostic_line(payload: dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, default=str)


def report_failure(exc: BaseException, stderr: IO[str]) -> int:
    """Write the one-line diagnostic for ``exc`` and return its exit status."""
    if isinstance(exc, CipnetError):
        payload = exc.as_dict()
    elif isinstance(exc, ValidationError):
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "config"
        payload = InvalidConfig(f"{field}: {first['msg']}", field=field).as_dict()
    elif isinstance(exc, OSError):
        payload = {
            "code": "io_error",
            "exit_status": IO_ERROR_EXIT_STATUS,
            "message": f"{exc.strerror or exc}: {exc.filename or ''}".rstrip(": "),
        }
    else:
        raise exc
    logger.info("cli.command_failed", code=payload["code"])
    stderr.write(diagnostic_line(payload) + "\n")
    return int(payload["exit_status"])


class BaseCommand:
    name: str = ""
    help: str = ""

    def __init__(
        self, stdout: Optional[IO[str]] = None, stderr: Optional[IO[str]] = None
    ) -> None:
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Hook for subclasses to register their own flags."""

    def handle(self, options: argparse.Namespace) -> None:
        raise NotImplementedError("subclasses of BaseCommand must provide handle()")

    def execute(self, options: argparse.Namespace) -> int:
        log = logger.bind(command=self.name)
        try:
            self.handle(options)
        except (CipnetError, ValidationError, OSError) as exc:
            return report_failure(exc, self.stderr)
        log.info("cli.command_finished")
        return 0

    # ------------------------------------------------------------------
    # Output helpers
    # ------------------------------------------------------------------

    def write_output(self, text: str, path: str = STDIO) -> None:
        if not text.endswith("\n"):
            text += "\n"
        if path == STDIO:
            self.stdout.write(text)
        else:
            Path(path).write_text(text, encoding="utf-8")


class GraphCommand(BaseCommand):
    """Base for commands that read a graph and run (part of) the pipeline."""

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "input", nargs="?", default=STDIO, help="Graph file ('-' for stdin)."
        )
        parser.add_argument(
            "--input-format", default="edge-list", help="edge-list or graphml."
        )
        parser.add_argument(
            "--format", dest="output_format", default="json", help="json, csv or table."
        )
        parser.add_argument("--output", "-o", default=STDIO, help="Output file.")
        parser.add_argument("--tol", type=float, help="Power-iteration tolerance.")
        parser.add_argument("--max-iter", type=int, help="Power-iteration cap.")
        parser.add_argument(
            "--kaiser", action="store_true", default=None, help="Kaiser-normalize."
        )
        parser.add_argument(
            "--largest-component",
            action="store_true",
            help="Analyze only the largest connected component.",
        )
        parser.add_argument(
            "--full-precision", action="store_true", help="Disable display rounding."
        )
        parser.add_argument("--workers", type=int, help="Betweenness worker processes.")
        parser.add_argument("--solver", help="Eigensolver: auto, jacobi or lapack.")

    def build_config(self, options: argparse.Namespace) -> AnalyzeConfig:
        """Merge flags over settings; unset flags keep the settings default."""
        overrides = {
            "tol": options.tol,
            "max_iter": options.max_iter,
            "kaiser": options.kaiser,
            "workers": options.workers,
            "solver": options.solver,
            "audit_path": getattr(options, "audit", None),
        }
        return AnalyzeConfig(
            input_path=options.input,
            input_format=options.input_format,
            output_format=options.output_format,
            output_path=options.output,
            largest_component=options.largest_component,
            full_precision=options.full_precision,
            **{key: value for key, value in overrides.items() if value is not None},
        )

    def load_graph(self, config: AnalyzeConfig) -> Graph:
        """Raises:
        OSError: the input cannot be read.
        InvalidInput: the input does not parse.
        """
        if config.input_format == "graphml":
            source = sys.stdin.buffer if config.input_path == STDIO else config.input_path
            return read_graphml(source)
        if config.input_path == STDIO:
            return parse_edge_list(sys.stdin)
        with open(config.input_path, encoding="utf-8") as stream:
            return parse_edge_list(stream)
