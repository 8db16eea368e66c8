"""CIP index constants.

Bins are 10 degrees wide and left-closed; angles below zero and at or
above 90 degrees get their own open-ended bins.  Core covers the two
top bins, peripheral the two bottom bins, intermediate the rest.
"""

from __future__ import annotations

from enum import StrEnum
from typing import NamedTuple


class CipClass(StrEnum):
    CORE = "Core"
    INTERMEDIATE = "Intermediate"
    PERIPHERAL = "Peripheral"


# Decides Top1/Top2 order when class fractions tie exactly.
CLASS_PRECEDENCE: tuple[CipClass, ...] = (
    CipClass.CORE,
    CipClass.INTERMEDIATE,
    CipClass.PERIPHERAL,
)

BIN_WIDTH_DEG = 10
BELOW_ZERO_BIN = "<0"
AT_OR_ABOVE_90_BIN = ">=90"
BIN_LABELS: tuple[str, ...] = (
    BELOW_ZERO_BIN,
    *(f"{k}..{k + BIN_WIDTH_DEG}" for k in range(0, 90, BIN_WIDTH_DEG)),
    AT_OR_ABOVE_90_BIN,
)
CORE_BINS = frozenset({"80..90", AT_OR_ABOVE_90_BIN})
PERIPHERAL_BINS = frozenset({BELOW_ZERO_BIN, "0..10"})

HEAVY_THRESHOLD = 0.5

# Angles equal to this many decimals tie when ranking.
RANK_ANGLE_DECIMALS = 9

CLASS_COLORS: dict[CipClass, str] = {
    CipClass.CORE: "blue",
    CipClass.INTERMEDIATE: "lightyellow",
    CipClass.PERIPHERAL: "red",
}


class ReferenceNetwork(NamedTuple):
    name: str
    n: int
    m: int
    lambda_sp: float
    fractions: tuple[float, float, float]
    classification: str


# Published results for twelve real-world networks, ordered by lambda_sp.
# fmt: off
REFERENCE_NETWORKS: tuple[ReferenceNetwork, ...] = (
    ReferenceNetwork("US Football", 115, 613, 1.01, (0.00, 1.00, 0.00), "Intermediate-heavy"),
    ReferenceNetwork("Taro Exchange", 22, 39, 1.06, (0.36, 0.59, 0.05), "Intermediate-heavy"),
    ReferenceNetwork("Flying Teams Cadets", 48, 170, 1.21, (0.50, 0.35, 0.15), "Core-heavy"),
    ReferenceNetwork("Dolphin", 62, 159, 1.40, (0.68, 0.16, 0.16), "Core-heavy"),
    ReferenceNetwork("Band Jazz", 198, 2742, 1.44, (0.33, 0.46, 0.21), "Intermediate/Core-heavy"),
    ReferenceNetwork("Karate", 34, 78, 1.47, (0.35, 0.21, 0.44), "Peripheral/Core-heavy"),
    ReferenceNetwork("Adjacency Noun", 112, 425, 1.73, (0.62, 0.26, 0.12), "Core-heavy"),
    ReferenceNetwork("Les Miserables", 77, 254, 1.82, (0.28, 0.14, 0.58), "Peripheral-heavy"),
    ReferenceNetwork("Copper Field", 87, 406, 1.83, (0.11, 0.39, 0.50), "Peripheral-heavy"),
    ReferenceNetwork("Anna Karenina", 138, 493, 2.48, (0.22, 0.10, 0.68), "Peripheral-heavy"),
    ReferenceNetwork("US Airports 1997", 332, 2126, 3.22, (0.27, 0.18, 0.55), "Peripheral-heavy"),
    ReferenceNetwork("EU Air Transport", 405, 1981, 3.81, (0.24, 0.21, 0.55), "Peripheral-heavy"),
)
# fmt: on
