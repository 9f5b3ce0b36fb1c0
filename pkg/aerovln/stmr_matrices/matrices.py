# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""The square label matrix which the planner sees."""

from __future__ import annotations

import typing

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_matrices
from aerovln import stmr_utilities

__all__ = ("StmrMatrix", "pool_to_matrix", "pool_blocks")


class StmrMatrix(stmr_utilities.StmrObject):
    """Square matrix of semantic ids around the UAV.

    :param cells: ``(size, size)`` integer array, row ``0`` is north.
    :param legend: The scene legend (ids ``> 0`` to category names).
    :param orientation_token: Heading and pitch of the UAV, for instance
        ``'west0'``. It replaces the centre cell in the text form.
    :param cell_metric: Meters between two neighbouring cells. Defaults
        to :const:`aerovln.stmr_matrices.configurations.CELL_METRIC`.
    :param center_label: Pooled label below the UAV. The centre cell
        itself always holds the trajectory id.
    :raises: :class:`aerovln.stmr_utilities.MatrixFormatError` if the
        matrix isn't square, has an odd size or contains unknown ids.
    """

    def __init__(
        self,
        cells: np.ndarray,
        legend: dict[int, str],
        orientation_token: str,
        cell_metric: typing.Optional[float] = None,
        center_label: int = stmr_constants.UNEXPLORED,
    ):
        if cell_metric is None:
            cell_metric = stmr_matrices.configurations.CELL_METRIC
        cells = np.array(cells, dtype=int)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1] or cells.shape[0] % 2:
            raise stmr_utilities.MatrixFormatError(
                f"expected an even sized square matrix, found shape {cells.shape}"
            )
        allowed_set = set(legend) | {
            stmr_constants.UNEXPLORED,
            stmr_constants.TRAJECTORY,
        }
        unknown_tuple = tuple(sorted(set(cells.ravel().tolist()) - allowed_set))
        if unknown_tuple:
            raise stmr_utilities.MatrixFormatError(
                f"ids {unknown_tuple} are missing from the legend"
            )
        if not orientation_token or any(c.isspace() for c in orientation_token):
            raise stmr_utilities.MatrixFormatError(
                f"invalid orientation token '{orientation_token}'"
            )
        cells.flags.writeable = False
        self.cells = cells
        self.legend = dict(sorted(legend.items()))
        self.orientation_token = orientation_token
        self.cell_metric = float(cell_metric)
        self.center_label = int(center_label)

    def __repr_content__(self) -> str:
        return f"size={self.size}, orientation_token={self.orientation_token!r}"

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, StmrMatrix)
            and np.array_equal(self.cells, other.cells)
            and stmr_utilities.test_if_objects_are_equal_by_parameter_tuple(
                self, other, ("legend", "orientation_token", "cell_metric")
            )
        )

    @property
    def size(self) -> int:
        return self.cells.shape[0]

    @property
    def center(self) -> tuple[int, int]:
        """``(row, column)`` of the UAV."""
        return self.size // 2, self.size // 2

    @property
    def full_legend(self) -> dict[int, str]:
        """Legend including the ids of unexplored cells and of the trajectory."""
        return {
            stmr_constants.UNEXPLORED: stmr_constants.UNEXPLORED_NAME,
            **self.legend,
            stmr_constants.TRAJECTORY: stmr_constants.TRAJECTORY_NAME,
        }

    def neighbourhood_labels(
        self, radius: typing.Optional[int] = None
    ) -> frozenset[int]:
        """Semantic ids within a Chebyshev distance of the UAV.

        :param radius: Distance in cells. Defaults to
            :const:`aerovln.stmr_matrices.configurations.NEIGHBOURHOOD_RADIUS`.

        The label below the UAV counts, the ids for unexplored cells and
        for the trajectory don't.
        """
        if radius is None:
            radius = stmr_matrices.configurations.NEIGHBOURHOOD_RADIUS
        row, column = self.center
        block = self.cells[
            max(row - radius, 0) : row + radius + 1,
            max(column - radius, 0) : column + radius + 1,
        ]
        label_set = set(block.ravel().tolist()) | {self.center_label}
        return frozenset(label_set) - {
            stmr_constants.UNEXPLORED,
            stmr_constants.TRAJECTORY,
        }


def pool_blocks(label_array: np.ndarray, block_size: int) -> np.ndarray:
    """Most frequent non-zero label of every block.

    :param label_array: Square array whose side is a multiple of
        ``block_size``.
    :param block_size: Side of a block in source cells.
    :return: Array with one value per block. Blocks without a non-zero
        label give ``0``, ties go to the lower id.

    **Example:**

    >>> import numpy as np
    >>> from aerovln import stmr_matrices
    >>> stmr_matrices.pool_blocks(np.array([[1, 2], [0, 0]]), 2).tolist()
    [[1]]
    """
    label_array = np.asarray(label_array, dtype=int)
    shape = label_array.shape
    if len(shape) != 2 or shape[0] != shape[1] or shape[0] % block_size:
        raise stmr_utilities.WindowShapeError(shape, shape[0] // block_size)
    n = shape[0] // block_size
    block_array = (
        label_array.reshape(n, block_size, n, block_size)
        .transpose(0, 2, 1, 3)
        .reshape(n, n, block_size * block_size)
    )
    candidate_array = np.unique(block_array)
    candidate_array = candidate_array[candidate_array != stmr_constants.UNEXPLORED]
    if not len(candidate_array):
        return np.zeros((n, n), dtype=int)
    count_array = (block_array[..., None] == candidate_array).sum(axis=2)
    # 'argmax' returns the first maximum, which is the lowest id.
    pooled = candidate_array[np.argmax(count_array, axis=2)]
    return np.where(count_array.max(axis=2) > 0, pooled, stmr_constants.UNEXPLORED)


def pool_to_matrix(
    window: stmr_matrices.LocalWindow,
    legend: dict[int, str],
    orientation_token: str,
    subgoal_labels: typing.Iterable[int] = tuple([]),
    cell_metric: typing.Optional[float] = None,
) -> StmrMatrix:
    """Pool a local window to the matrix.

    :param window: The window, see
        :func:`aerovln.stmr_matrices.extract_local_window`.
    :param legend: The scene legend.
    :param orientation_token: See :func:`aerovln.stmr_matrices.orientation_token`.
    :param subgoal_labels: Labels of the current sub-goal landmarks.
    :param cell_metric: Meters per matrix cell.
    :raises: :class:`aerovln.stmr_utilities.WindowShapeError` if the
        window side isn't ``matrix_size`` times the block size.

    Each matrix cell takes the most frequent non-zero label of its
    block. A block which contains a visited cell becomes ``-1``, unless
    its label belongs to the current sub-goal. The centre cell is always
    ``-1``; its pooled label is kept as
    :attr:`StmrMatrix.center_label`.
    """
    label_array = np.asarray(window.label_array, dtype=int)
    side = window.matrix_size * window.block_size
    if (
        label_array.shape != (side, side)
        or np.shape(window.trajectory_array) != label_array.shape
    ):
        raise stmr_utilities.WindowShapeError(label_array.shape, window.matrix_size)
    pooled = pool_blocks(label_array, window.block_size)
    visited = pool_blocks(
        np.asarray(window.trajectory_array, dtype=int), window.block_size
    ).astype(bool)
    protected = np.isin(pooled, list(set(subgoal_labels)))
    cells = np.where(visited & ~protected, stmr_constants.TRAJECTORY, pooled)
    half = window.matrix_size // 2
    center_label = int(pooled[half, half])
    cells[half, half] = stmr_constants.TRAJECTORY
    return StmrMatrix(cells, legend, orientation_token, cell_metric, center_label)
