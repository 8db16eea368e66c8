"""``cipnet rank``: the ranked per-node table only."""

from __future__ import annotations

import argparse

from cipnet.cli.commands.analyze import AnalyzeCommand
from cipnet.cli.renderers import render_records


class RankCommand(AnalyzeCommand):
    name = "rank"
    help = "Rank nodes from most core to most peripheral."

    def handle(self, options: argparse.Namespace) -> None:
        config, result = self.run_pipeline(options)
        self.write_output(
            render_records(result.report.records, config.output_format, config.decimals),
            config.output_path,
        )
