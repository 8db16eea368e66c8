"""Unit tests for the CIP versus k-core comparison."""

import pytest

from cipnet.cip import compare_with_kcore
from cipnet.cip.exceptions import EmptyRecords
from tests.unit.cip.factories import at_angle

pytestmark = pytest.mark.unit


class TestCompareWithKCore:
    def test_innermost_shell_members(self):
        records = [
            at_angle("a", 88.0, k_core=3, coreness=9),
            at_angle("b", 50.0, k_core=3, coreness=8),
            at_angle("c", 5.0, k_core=1, coreness=3),
        ]
        comparison = compare_with_kcore(records)
        assert comparison.max_k == 3
        assert comparison.innermost == ["a", "b"]
        assert comparison.innermost_classes == {"a": "Core", "b": "Intermediate"}
        assert comparison.non_core_in_innermost == 1
        assert comparison.angle_coreness_correlation > 0.9

    def test_constant_coreness_has_no_correlation(self):
        records = [
            at_angle("a", 10.0, k_core=2, coreness=4),
            at_angle("b", 60.0, k_core=2, coreness=4),
        ]
        assert compare_with_kcore(records).angle_coreness_correlation is None

    def test_empty(self):
        with pytest.raises(EmptyRecords):
            compare_with_kcore([])
