"""CIP DTOs.

Immutable pydantic v2 contracts for everything the CLI renders:

- ``CipRecord``: one node's centralities, loadings, angle, bin and class.
- ``BinsFractionTuple``: class counts and their exact fractions.
- ``KCoreComparison``: how the innermost k-core fares under the CIP index.
- ``NetworkReport``: the network-level summary plus ranked records.

Python-side attribute names that clash with keywords or builtins
(``class``, ``tuple``) are serialized under their wire names through
``serialization_alias``; dump with ``by_alias=True``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    computed_field,
    model_validator,
)

from cipnet.cip.constants import CipClass
from cipnet.cip.indexing import bin_of, cip_index, classify_fractions, classify_node


class CipRecord(BaseModel):
    """Immutable per-node result.

    Validates:
    - ``angle_deg`` matches ``cip_index(p_load, c_load)``.
    - ``bin`` and ``node_class`` are the ones derived from ``angle_deg``.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    node: str
    deg: int
    evc: float
    bwc: float
    clc: float
    k_core: NonNegativeInt
    coreness: NonNegativeInt
    p_load: float
    c_load: float
    angle_deg: float = Field(serialization_alias="cip_deg")
    bin: str
    node_class: CipClass = Field(serialization_alias="class")
    rank: Optional[int] = None
    quadrant_reflected: bool = False

    @model_validator(mode="after")
    def angle_bin_and_class_agree(self):
        expected = cip_index(self.p_load, self.c_load)
        if abs(expected - self.angle_deg) > 1e-9:
            raise ValueError(
                f"angle_deg {self.angle_deg!r} disagrees with loadings "
                f"({self.p_load!r}, {self.c_load!r})."
            )
        if self.bin != bin_of(self.angle_deg):
            raise ValueError(f"bin {self.bin!r} does not hold {self.angle_deg!r}.")
        if self.node_class is not classify_node(self.bin):
            raise ValueError(f"class {self.node_class} does not match bin {self.bin}.")
        return self

    def to_row(self) -> dict[str, Any]:
        """Wire-format dict in the documented column order."""
        return self.model_dump(by_alias=True, exclude={"quadrant_reflected"})


class BinsFractionTuple(BaseModel):
    """Class counts in ``[Core, Intermediate, Peripheral]`` order.

    The fractions are derived from the counts, so they are exact
    rationals and always sum to one.
    """

    model_config = ConfigDict(frozen=True)

    core_count: NonNegativeInt
    intermediate_count: NonNegativeInt
    peripheral_count: NonNegativeInt

    @model_validator(mode="after")
    def at_least_one_node(self):
        if self.n < 1:
            raise ValueError("A bins-fraction tuple needs at least one node.")
        return self

    @property
    def n(self) -> int:
        return self.core_count + self.intermediate_count + self.peripheral_count

    def fractions(self) -> tuple[Fraction, Fraction, Fraction]:
        return (
            Fraction(self.core_count, self.n),
            Fraction(self.intermediate_count, self.n),
            Fraction(self.peripheral_count, self.n),
        )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def core_frac(self) -> float:
        return float(self.fractions()[0])

    @computed_field  # type: ignore[prop-decorator]
    @property
    def intermediate_frac(self) -> float:
        return float(self.fractions()[1])

    @computed_field  # type: ignore[prop-decorator]
    @property
    def peripheral_frac(self) -> float:
        return float(self.fractions()[2])

    def as_list(self) -> list[float]:
        return [self.core_frac, self.intermediate_frac, self.peripheral_frac]


class KCoreComparison(BaseModel):
    """Innermost k-core members seen through their CIP classes."""

    model_config = ConfigDict(frozen=True)

    max_k: NonNegativeInt
    innermost: List[str]
    innermost_classes: dict[str, CipClass]
    non_core_in_innermost: NonNegativeInt
    # None when angle or coreness is constant over the network.
    angle_coreness_correlation: Optional[float] = None


class NetworkReport(BaseModel):
    """Immutable network-level result; ``records`` are in rank order."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: NonNegativeInt
    m: NonNegativeInt
    lambda_sp: float
    fractions: BinsFractionTuple = Field(serialization_alias="tuple")
    classification: str
    records: List[CipRecord]
    quadrant_reflected_count: NonNegativeInt = 0
    single_factor: bool = False
    kaiser: bool = False
    kcore: Optional[KCoreComparison] = None

    @model_validator(mode="after")
    def summary_matches_records(self):
        if len(self.records) != self.n:
            raise ValueError(f"Expected {self.n} records, got {len(self.records)}.")
        reflected = sum(record.quadrant_reflected for record in self.records)
        if reflected != self.quadrant_reflected_count:
            raise ValueError("quadrant_reflected_count disagrees with records.")
        expected = classify_fractions(*self.fractions.fractions())
        if self.classification != expected:
            raise ValueError(
                f"classification {self.classification!r} does not follow from "
                f"the tuple (expected {expected!r})."
            )
        return self

    def network_summary(self) -> dict[str, Any]:
        """The network JSON object: tuple flattened to ``[c, i, p]``."""
        return {
            "n": self.n,
            "m": self.m,
            "lambda_sp": self.lambda_sp,
            "tuple": self.fractions.as_list(),
            "classification": self.classification,
            "quadrant_reflected_count": self.quadrant_reflected_count,
            "single_factor": self.single_factor,
        }

    def to_dict(self) -> dict[str, Any]:
        payload = self.network_summary()
        payload["records"] = [record.to_row() for record in self.records]
        payload["kcore"] = (
            self.kcore.model_dump(mode="json") if self.kcore is not None else None
        )
        return payload
