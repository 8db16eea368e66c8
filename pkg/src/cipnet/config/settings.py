"""Runtime settings and structured logging.

Values come from environment variables (or a ``.env`` file) through
python-decouple; CLI flags override them per invocation.
"""

from __future__ import annotations

import logging
import sys
from typing import Any

import structlog
from decouple import Choices, config

# ---------------------------------------------------------------------------
# Numerics
# ---------------------------------------------------------------------------
POWER_ITERATION_TOL = config("CIPNET_TOL", default=1e-10, cast=float)
POWER_ITERATION_MAX_ITER = config("CIPNET_MAX_ITER", default=10000, cast=int)

JACOBI_TOL = config("CIPNET_JACOBI_TOL", default=1e-12, cast=float)
JACOBI_MAX_SWEEPS = config("CIPNET_JACOBI_MAX_SWEEPS", default=100, cast=int)
# Above this node count the ``auto`` solver delegates to LAPACK.
JACOBI_MAX_NODES = config("CIPNET_JACOBI_MAX_NODES", default=150, cast=int)
EIGEN_SOLVER = config(
    "CIPNET_EIGEN_SOLVER",
    default="auto",
    cast=Choices(["auto", "jacobi", "lapack"]),
)

KAISER_NORMALIZATION = config("CIPNET_KAISER", default=False, cast=bool)
BETWEENNESS_WORKERS = config("CIPNET_WORKERS", default=1, cast=int)

# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------
DISPLAY_DECIMALS = config("CIPNET_DISPLAY_DECIMALS", default=4, cast=int)

# ---------------------------------------------------------------------------
# Structured Logging (structlog + stdlib logging)
# ---------------------------------------------------------------------------
LOG_LEVEL = config("CIPNET_LOG_LEVEL", default="WARNING")
LOG_FORMAT = config(
    "CIPNET_LOG_FORMAT", default="json", cast=Choices(["json", "console"])
)

# Shared processors used by both structlog and stdlib logging
_shared_processors: list[Any] = [
    structlog.contextvars.merge_contextvars,
    structlog.stdlib.add_log_level,
    structlog.stdlib.add_logger_name,
    structlog.processors.TimeStamper(fmt="iso"),
    structlog.processors.StackInfoRenderer(),
    structlog.processors.UnicodeDecoder(),
]


def configure_logging(level: str | None = None, fmt: str | None = None) -> None:
    """Route structlog and stdlib records through one stderr handler.

    Stdout is reserved for reports, so the handler always writes to stderr.
    """
    renderer: Any
    if (fmt or LOG_FORMAT) == "console":
        renderer = structlog.dev.ConsoleRenderer(colors=False)
    else:
        renderer = structlog.processors.JSONRenderer()

    structlog.configure(
        processors=[
            *_shared_processors,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    formatter = structlog.stdlib.ProcessorFormatter(
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            renderer,
        ],
        foreign_pre_chain=_shared_processors,
    )
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel((level or LOG_LEVEL).upper())
