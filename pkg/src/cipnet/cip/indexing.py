"""Per-node CIP angle, bin and class.

A node's oriented loadings ``(p, c)`` form a vector whose polar angle in
degrees is its CIP index: 0 means purely peripheral, 90 purely core.
Vectors in the third quadrant are reflected through the origin before
measuring, so ``(-p, -c)`` and ``(p, c)`` get the same angle.
"""

from __future__ import annotations

import math
from fractions import Fraction

from cipnet.cip.constants import (
    AT_OR_ABOVE_90_BIN,
    BELOW_ZERO_BIN,
    BIN_LABELS,
    BIN_WIDTH_DEG,
    CLASS_PRECEDENCE,
    CORE_BINS,
    HEAVY_THRESHOLD,
    PERIPHERAL_BINS,
    CipClass,
)
from cipnet.cip.exceptions import InvalidAngle, UnknownBin, ZeroLoadings


def is_quadrant_reflected(p_load: float, c_load: float) -> bool:
    # The negative peripheral half-axis (c == 0) reflects onto 0 degrees.
    return p_load < 0.0 and c_load <= 0.0


def cip_index(p_load: float, c_load: float) -> float:
    """Angle of ``(p_load, c_load)`` in degrees, in ``[-90, 180)``.

    Raises:
        ZeroLoadings: both loadings are zero.
    """
    if p_load == 0.0 and c_load == 0.0:
        raise ZeroLoadings(
            "Node has zero loadings on both factors; CIP index is undefined.",
            p_load=p_load,
            c_load=c_load,
        )
    if is_quadrant_reflected(p_load, c_load):
        p_load, c_load = -p_load, -c_load
    # ``+ 0.0`` folds a negative zero into 0.0.
    return math.degrees(math.atan2(c_load, p_load)) + 0.0


def bin_of(angle_deg: float) -> str:
    """Ten-degree bin label; left-closed, right-open."""
    if not math.isfinite(angle_deg):
        raise InvalidAngle(f"Angle must be finite, got {angle_deg!r}.")
    if angle_deg < 0.0:
        return BELOW_ZERO_BIN
    if angle_deg >= 90.0:
        return AT_OR_ABOVE_90_BIN
    low = int(angle_deg // BIN_WIDTH_DEG) * BIN_WIDTH_DEG
    return f"{low}..{low + BIN_WIDTH_DEG}"


def classify_node(bin_label: str) -> CipClass:
    if bin_label not in BIN_LABELS:
        raise UnknownBin(f"Unknown bin label {bin_label!r}.", bin=bin_label)
    if bin_label in CORE_BINS:
        return CipClass.CORE
    if bin_label in PERIPHERAL_BINS:
        return CipClass.PERIPHERAL
    return CipClass.INTERMEDIATE


def classify_fractions(
    core: Fraction | float,
    intermediate: Fraction | float,
    peripheral: Fraction | float,
) -> str:
    """Network label from class fractions in ``[C, I, P]`` order.

    One class holding at least half the nodes gives ``"<Class>-heavy"``;
    otherwise the two largest classes give ``"<Top1>/<Top2>-heavy"``.
    Exact ties follow ``CLASS_PRECEDENCE``.
    """
    # sorted() is stable, so equal fractions keep precedence order.
    ranked = sorted(
        zip(CLASS_PRECEDENCE, (core, intermediate, peripheral)),
        key=lambda pair: pair[1],
        reverse=True,
    )
    (top1, top1_frac), (top2, _) = ranked[0], ranked[1]
    if top1_frac >= HEAVY_THRESHOLD:
        return f"{top1}-heavy"
    return f"{top1}/{top2}-heavy"
