"""CLI DTOs.

Command-line flags merged over ``cipnet.config.settings`` and validated
before any work starts.  Immutable (``frozen=True``).

- ``AnalyzeConfig``: input, output and numeric options for the pipeline
  commands (``analyze``, ``rank``, ``metrics``, ``export-dot``).
- ``GenerateConfig``: random-graph generator parameters for ``gen``.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from cipnet.config import settings
from cipnet.factor.eigen import SOLVERS
from cipnet.graphs.constants import GENERATOR_KINDS, GRAPH_FORMATS

OUTPUT_FORMATS = ("json", "csv", "table")
STDIO = "-"


class AnalyzeConfig(BaseModel):
    """Immutable options for the pipeline commands.

    Validates:
    - ``tol`` is positive; ``max_iter`` and ``workers`` are at least 1.
    - ``input_format`` and ``output_format`` name supported formats.
    """

    model_config = ConfigDict(frozen=True)

    input_path: str = STDIO
    input_format: str = "edge-list"
    output_format: str = "json"
    output_path: str = STDIO
    tol: float = settings.POWER_ITERATION_TOL
    max_iter: int = settings.POWER_ITERATION_MAX_ITER
    kaiser: bool = settings.KAISER_NORMALIZATION
    largest_component: bool = False
    full_precision: bool = False
    workers: int = settings.BETWEENNESS_WORKERS
    solver: str = settings.EIGEN_SOLVER
    audit_path: Optional[str] = None

    @field_validator("tol")
    @classmethod
    def tol_must_be_positive(cls, v: float) -> float:
        if not v > 0.0:
            raise ValueError("Tolerance must be positive.")
        return v

    @field_validator("max_iter", "workers")
    @classmethod
    def count_must_be_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("Must be at least 1.")
        return v

    @field_validator("input_format")
    @classmethod
    def input_format_supported(cls, v: str) -> str:
        if v not in GRAPH_FORMATS:
            raise ValueError(f"Input format must be one of {', '.join(GRAPH_FORMATS)}.")
        return v

    @field_validator("output_format")
    @classmethod
    def output_format_supported(cls, v: str) -> str:
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"Output format must be one of {', '.join(OUTPUT_FORMATS)}.")
        return v

    @field_validator("solver")
    @classmethod
    def solver_supported(cls, v: str) -> str:
        if v not in SOLVERS:
            raise ValueError(f"Solver must be one of {', '.join(SOLVERS)}.")
        return v

    @property
    def decimals(self) -> int | None:
        return None if self.full_precision else settings.DISPLAY_DECIMALS


class GenerateConfig(BaseModel):
    """Immutable generator parameters.

    Validates:
    - ``er`` needs ``p``; ``ba`` needs ``m_attach``.
    Range checks on the values themselves belong to the generators.
    """

    model_config = ConfigDict(frozen=True)

    kind: str
    n: int
    p: Optional[float] = None
    m_attach: Optional[int] = None
    seed: Optional[int] = None
    output_path: str = STDIO

    @field_validator("kind")
    @classmethod
    def kind_supported(cls, v: str) -> str:
        if v not in GENERATOR_KINDS:
            raise ValueError(f"Generator must be one of {', '.join(GENERATOR_KINDS)}.")
        return v

    @model_validator(mode="after")
    def parameters_match_kind(self):
        if self.kind == "er" and self.p is None:
            raise ValueError("The er generator needs --p.")
        if self.kind == "ba" and self.m_attach is None:
            raise ValueError("The ba generator needs --m.")
        return self
