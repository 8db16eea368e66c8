"""CIP classes against the k-core baseline.

The k-core procedure puts every node of the innermost shell on equal
footing; the CIP index can still separate them.  The comparison reports
which innermost members the index does not call Core, and how closely
CIP angle tracks coreness across the whole network.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from cipnet.cip.constants import CipClass
from cipnet.cip.dtos import CipRecord, KCoreComparison
from cipnet.cip.exceptions import EmptyRecords
from cipnet.factor.rotation import pearson


def compare_with_kcore(records: Sequence[CipRecord]) -> KCoreComparison:
    if not records:
        raise EmptyRecords("Cannot compare an empty record set with k-cores.")
    max_k = max(record.k_core for record in records)
    innermost = [record for record in records if record.k_core == max_k]
    r = pearson(
        np.array([record.angle_deg for record in records]),
        np.array([record.coreness for record in records], dtype=np.float64),
    )
    return KCoreComparison(
        max_k=max_k,
        innermost=[record.node for record in innermost],
        innermost_classes={record.node: record.node_class for record in innermost},
        non_core_in_innermost=sum(
            record.node_class is not CipClass.CORE for record in innermost
        ),
        angle_coreness_correlation=None if math.isnan(r) else r,
    )
