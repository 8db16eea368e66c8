"""Unit tests for node angles, bins and classes."""

import math

import pytest

from cipnet.cip import (
    BIN_LABELS,
    CipClass,
    bin_of,
    cip_index,
    classify_fractions,
    classify_node,
    is_quadrant_reflected,
)
from cipnet.cip.exceptions import InvalidAngle, UnknownBin, ZeroLoadings

pytestmark = pytest.mark.unit


class TestCipIndex:
    @pytest.mark.parametrize(
        "p_load, c_load, expected",
        [
            (1.0, 0.0, 0.0),
            (0.0, 1.0, 90.0),
            (1.0, 1.0, 45.0),
            (-1.0, 1.0, 135.0),
            (1.0, -1.0, -45.0),
            (0.0, -1.0, -90.0),
        ],
    )
    def test_quadrants_one_two_and_four(self, p_load, c_load, expected):
        assert cip_index(p_load, c_load) == pytest.approx(expected)

    def test_just_past_the_core_axis(self):
        angle = cip_index(-0.1, 0.99)
        assert angle == pytest.approx(95.768, abs=1e-3)
        assert bin_of(angle) == ">=90"

    def test_third_quadrant_is_reflected(self):
        assert is_quadrant_reflected(-1.0, -2.0)
        assert cip_index(-1.0, -2.0) == pytest.approx(cip_index(1.0, 2.0))

    def test_negative_peripheral_axis_reflects_to_zero(self):
        assert is_quadrant_reflected(-1.0, 0.0)
        angle = cip_index(-1.0, 0.0)
        assert angle == 0.0
        assert math.copysign(1.0, angle) == 1.0

    def test_other_quadrants_are_not_reflected(self):
        assert not any(
            is_quadrant_reflected(p, c)
            for p, c in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (0.0, -1.0)]
        )

    def test_origin_is_undefined(self):
        with pytest.raises(ZeroLoadings):
            cip_index(0.0, 0.0)


class TestBinOf:
    @pytest.mark.parametrize(
        "angle, expected",
        [
            (0.0, "0..10"),
            (9.999, "0..10"),
            (10.0, "10..20"),
            (45.0, "40..50"),
            (89.999, "80..90"),
            (90.0, ">=90"),
            (179.0, ">=90"),
            (-3.2, "<0"),
            (-89.0, "<0"),
        ],
    )
    def test_half_open_bins(self, angle, expected):
        assert bin_of(angle) == expected

    def test_every_bin_label_is_reachable(self):
        reached = {bin_of(angle) for angle in range(-5, 100, 5)}
        assert reached == set(BIN_LABELS)

    def test_nan_rejected(self):
        with pytest.raises(InvalidAngle):
            bin_of(math.nan)


class TestClassifyNode:
    @pytest.mark.parametrize(
        "bin_label, expected",
        [
            ("80..90", CipClass.CORE),
            (">=90", CipClass.CORE),
            ("<0", CipClass.PERIPHERAL),
            ("0..10", CipClass.PERIPHERAL),
            ("10..20", CipClass.INTERMEDIATE),
            ("40..50", CipClass.INTERMEDIATE),
            ("70..80", CipClass.INTERMEDIATE),
        ],
    )
    def test_bin_to_class(self, bin_label, expected):
        assert classify_node(bin_label) is expected

    def test_unknown_bin(self):
        with pytest.raises(UnknownBin):
            classify_node("90..100")


class TestClassifyFractions:
    @pytest.mark.parametrize(
        "fractions, expected",
        [
            ((0.3, 0.2, 0.5), "Peripheral-heavy"),
            ((0.35, 0.21, 0.44), "Peripheral/Core-heavy"),
            ((0.33, 0.46, 0.21), "Intermediate/Core-heavy"),
            ((0.0, 1.0, 0.0), "Intermediate-heavy"),
            ((0.5, 0.5, 0.0), "Core-heavy"),
        ],
    )
    def test_labels(self, fractions, expected):
        assert classify_fractions(*fractions) == expected

    def test_exact_ties_follow_precedence(self):
        assert classify_fractions(0.2, 0.4, 0.4) == "Intermediate/Peripheral-heavy"
        assert classify_fractions(0.4, 0.2, 0.4) == "Core/Peripheral-heavy"
        assert classify_fractions(0.4, 0.4, 0.2) == "Core/Intermediate-heavy"
