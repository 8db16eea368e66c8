"""Unit tests for varimax rotation and axis orientation."""

import math

import numpy as np
import pytest

from cipnet.factor import (
    LoadingsMatrix,
    LoadingStage,
    node_correlation_matrix,
    orient_axes,
    top2_eigenpairs,
    varimax_criterion,
    varimax_rotate,
)
from cipnet.factor.exceptions import AmbiguousOrientation, InvalidLoadingStage
from cipnet.factor.rotation import pearson, rotation_matrix, varimax_angle

pytestmark = pytest.mark.unit

LABELS = ("a", "b", "c")


def rotated(values) -> LoadingsMatrix:
    return LoadingsMatrix(
        labels=LABELS[: len(values)],
        values=np.asarray(values, dtype=float),
        stage=LoadingStage.ROTATED,
        rotation=np.eye(2),
    )


class TestVarimax:
    def test_simple_structure_is_left_alone(self):
        loadings = LoadingsMatrix.initial(LABELS[:2], np.eye(2))
        result = varimax_rotate(loadings)
        assert result.values == pytest.approx(np.eye(2))
        assert result.stage is LoadingStage.ROTATED

    def test_diagonal_rows_rotate_onto_one_axis(self):
        radii = np.array([1.0, 2.0, 3.0])
        values = np.column_stack([radii, radii]) / math.sqrt(2)
        loadings = LoadingsMatrix.initial(LABELS, values)
        result = varimax_rotate(loadings)
        assert varimax_angle(values) == pytest.approx(math.pi / 4)
        assert np.abs(result.values[:, 0]) == pytest.approx(radii)
        assert result.values[:, 1] == pytest.approx([0.0] * 3, abs=1e-12)
        assert varimax_criterion(result.values) > varimax_criterion(values)

    def test_preserves_communalities_and_orthogonality(self, example_table):
        _, vectors = top2_eigenpairs(node_correlation_matrix(example_table))
        initial = LoadingsMatrix.initial(example_table.labels, vectors)
        for kaiser in (False, True):
            result = varimax_rotate(initial, kaiser=kaiser)
            assert result.communalities == pytest.approx(initial.communalities, abs=1e-9)
            assert result.rotation.T @ result.rotation == pytest.approx(
                np.eye(2), abs=1e-10
            )
            assert initial.values @ result.rotation == pytest.approx(result.values)
        assert varimax_criterion(varimax_rotate(initial).values) >= varimax_criterion(
            initial.values
        ) - 1e-12

    def test_rejects_non_initial_stage(self):
        with pytest.raises(InvalidLoadingStage):
            varimax_rotate(rotated([[1.0, 0.0], [0.0, 1.0]]))

    def test_rotation_matrix_is_orthogonal(self):
        r = rotation_matrix(0.3)
        assert r.T @ r == pytest.approx(np.eye(2))
        assert np.linalg.det(r) == pytest.approx(1.0)


class TestOrientAxes:
    VALUES = [[0.1, 0.9], [0.9, 0.1], [0.8, 0.2]]
    BWC = np.array([10.0, 0.0, 1.0])

    def test_core_column_already_second(self):
        result = orient_axes(rotated(self.VALUES), self.BWC)
        assert result.values == pytest.approx(np.array(self.VALUES))
        assert result.stage is LoadingStage.ORIENTED

    def test_swapped_columns_are_swapped_back(self):
        swapped = np.array(self.VALUES)[:, ::-1]
        result = orient_axes(rotated(swapped), self.BWC)
        assert result.values == pytest.approx(np.array(self.VALUES))

    def test_negative_columns_are_flipped(self):
        flipped = -np.array(self.VALUES)
        result = orient_axes(rotated(flipped), self.BWC)
        assert result.values == pytest.approx(np.array(self.VALUES))
        assert result.rotation.T @ result.rotation == pytest.approx(np.eye(2))

    def test_constant_bwc_is_ambiguous(self):
        with pytest.raises(AmbiguousOrientation):
            orient_axes(rotated(self.VALUES), np.zeros(3))

    def test_rejects_initial_stage(self):
        loadings = LoadingsMatrix.initial(LABELS, np.array(self.VALUES))
        with pytest.raises(InvalidLoadingStage):
            orient_axes(loadings, self.BWC)


class TestPearson:
    def test_perfect_correlation(self):
        x = np.array([1.0, 2.0, 3.0])
        assert pearson(x, 2.0 * x) == pytest.approx(1.0)

    def test_constant_side_is_nan(self):
        assert math.isnan(pearson(np.ones(3), np.arange(3.0)))
