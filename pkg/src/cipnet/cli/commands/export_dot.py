"""``cipnet export-dot``: class-coloured DOT (or GraphML) of the analyzed graph."""

from __future__ import annotations

import argparse

from cipnet.cli.commands.analyze import AnalyzeCommand
from cipnet.cli.exporters import report_to_dot, report_to_graphml


class ExportDotCommand(AnalyzeCommand):
    name = "export-dot"
    help = "Export the graph coloured and sized by CIP class and angle."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument(
            "--graphml", action="store_true", help="Write GraphML instead of DOT."
        )

    def handle(self, options: argparse.Namespace) -> None:
        config, result = self.run_pipeline(options)
        exporter = report_to_graphml if options.graphml else report_to_dot
        self.write_output(exporter(result.report, result.graph), config.output_path)
