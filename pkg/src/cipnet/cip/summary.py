"""Network-level summaries over node records: tuple, label and ranking."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

from cipnet.cip.constants import RANK_ANGLE_DECIMALS, CipClass
from cipnet.cip.dtos import BinsFractionTuple, CipRecord
from cipnet.cip.exceptions import EmptyRecords
from cipnet.cip.indexing import classify_fractions


def bins_fraction_tuple(records: Sequence[CipRecord]) -> BinsFractionTuple:
    """Raises:
    EmptyRecords: no records.
    """
    if not records:
        raise EmptyRecords("Cannot build a bins-fraction tuple from zero records.")
    counts = Counter(record.node_class for record in records)
    return BinsFractionTuple(
        core_count=counts[CipClass.CORE],
        intermediate_count=counts[CipClass.INTERMEDIATE],
        peripheral_count=counts[CipClass.PERIPHERAL],
    )


def classify_network(t: BinsFractionTuple) -> str:
    return classify_fractions(*t.fractions())


def rank_nodes(records: Sequence[CipRecord]) -> list[CipRecord]:
    """Most core first: angle descending, then BWC descending, then input order.

    Angles and BWC are compared after rounding so that nodes with
    identical centrality columns tie despite floating-point noise.
    Returns copies with ``rank`` set, starting at 1.
    """
    indexed = list(enumerate(records))
    indexed.sort(
        key=lambda item: (
            -round(item[1].angle_deg, RANK_ANGLE_DECIMALS),
            -round(item[1].bwc, RANK_ANGLE_DECIMALS),
            item[0],
        )
    )
    return [
        record.model_copy(update={"rank": rank})
        for rank, (_, record) in enumerate(indexed, start=1)
    ]
