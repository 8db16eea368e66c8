"""``cipnet gen``: seeded random graphs as edge lists."""

from __future__ import annotations

import argparse

from cipnet.cli.commands.base import BaseCommand
from cipnet.cli.dtos import STDIO, GenerateConfig
from cipnet.graphs.generators import generate_ba, generate_er
from cipnet.graphs.models import Graph
from cipnet.graphs.serializers import serialize_edge_list


class GenCommand(BaseCommand):
    name = "gen"
    help = "Generate an Erdos-Renyi (er) or Barabasi-Albert (ba) edge list."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("kind", help="er or ba.")
        parser.add_argument("--n", type=int, required=True, help="Node count.")
        parser.add_argument("--p", type=float, help="Edge probability (er).")
        parser.add_argument(
            "--m", dest="m_attach", type=int, help="Edges per new node (ba)."
        )
        parser.add_argument("--seed", type=int, help="Random seed.")
        parser.add_argument("--out", "-o", default=STDIO, help="Output file.")

    def handle(self, options: argparse.Namespace) -> None:
        config = GenerateConfig(
            kind=options.kind,
            n=options.n,
            p=options.p,
            m_attach=options.m_attach,
            seed=options.seed,
            output_path=options.out,
        )
        self.write_output(serialize_edge_list(generate(config)), config.output_path)


def generate(config: GenerateConfig) -> Graph:
    if config.kind == "er":
        assert config.p is not None
        return generate_er(config.n, config.p, seed=config.seed)
    assert config.m_attach is not None
    return generate_ba(config.n, config.m_attach, seed=config.seed)
