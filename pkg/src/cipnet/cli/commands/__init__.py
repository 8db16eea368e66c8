from cipnet.cli.commands.analyze import AnalyzeCommand
from cipnet.cli.commands.base import BaseCommand
from cipnet.cli.commands.export_dot import ExportDotCommand
from cipnet.cli.commands.gen import GenCommand
from cipnet.cli.commands.metrics import MetricsCommand
from cipnet.cli.commands.rank import RankCommand

COMMANDS: tuple[type[BaseCommand], ...] = (
    AnalyzeCommand,
    RankCommand,
    MetricsCommand,
    GenCommand,
    ExportDotCommand,
)

__all__ = [
    "COMMANDS",
    "AnalyzeCommand",
    "BaseCommand",
    "ExportDotCommand",
    "GenCommand",
    "MetricsCommand",
    "RankCommand",
]
