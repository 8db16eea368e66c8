"""``cipnet analyze``: full pipeline, network summary plus ranked records."""

from __future__ import annotations

import argparse
from pathlib import Path

from cipnet.cip.services import AnalysisResult, CipAnalysisService
from cipnet.cli.commands.base import GraphCommand
from cipnet.cli.dtos import AnalyzeConfig
from cipnet.cli.renderers import render_report
from cipnet.factor.exporters import factor_audit_csv


def build_service(config: AnalyzeConfig) -> CipAnalysisService:
    return CipAnalysisService(
        tol=config.tol,
        max_iter=config.max_iter,
        kaiser=config.kaiser,
        solver=config.solver,
        workers=config.workers,
        largest_component=config.largest_component,
    )


class AnalyzeCommand(GraphCommand):
    name = "analyze"
    help = "Run the CIP pipeline and report the network classification."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument(
            "--audit", help="Also write the factor-analysis audit CSV to this path."
        )

    def run_pipeline(
        self, options: argparse.Namespace
    ) -> tuple[AnalyzeConfig, AnalysisResult]:
        config = self.build_config(options)
        result = build_service(config).analyze(self.load_graph(config))
        if config.audit_path:
            Path(config.audit_path).write_text(
                factor_audit_csv(result.factors), encoding="utf-8"
            )
        return config, result

    def handle(self, options: argparse.Namespace) -> None:
        config, result = self.run_pipeline(options)
        self.write_output(
            render_report(result.report, config.output_format, config.decimals),
            config.output_path,
        )
