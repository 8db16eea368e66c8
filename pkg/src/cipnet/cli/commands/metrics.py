"""``cipnet metrics``: the DEG/EVC/BWC/CLC table only."""

from __future__ import annotations

import argparse

from cipnet.cli.commands.analyze import build_service
from cipnet.cli.commands.base import GraphCommand
from cipnet.cli.renderers import render_centrality


class MetricsCommand(GraphCommand):
    name = "metrics"
    help = "Print the node centrality table."

    def handle(self, options: argparse.Namespace) -> None:
        config = self.build_config(options)
        table = build_service(config).metrics(self.load_graph(config))
        self.write_output(
            render_centrality(table, config.output_format, config.decimals),
            config.output_path,
        )
