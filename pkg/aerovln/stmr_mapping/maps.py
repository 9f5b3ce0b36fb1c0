# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""World anchored top-down semantic map with a trajectory layer."""

from __future__ import annotations

import math
import typing

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_mapping
from aerovln import stmr_parameters
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = ("Cell", "TopDownMap", "project_top_down", "mark_waypoint")

Cell: typing.TypeAlias = tuple[int, int]


class TopDownMap(stmr_utilities.StmrObject):
    """Semantic label per ground cell plus the visited cells.

    :param cell_size: Side length of a cell in meters. Defaults to
        :const:`aerovln.stmr_mapping.configurations.VOXEL_SIZE`.
    :param label_dict: Label of every explored cell ``(i, j)``. Cells
        which are missing are unexplored.
    :param trajectory: Visited cells in the order of their first visit.

    Cell ``(i, j)`` covers ``[i·c, (i+1)·c) x [j·c, (j+1)·c)`` for cell
    size ``c``, so the map is anchored at the world origin and grows on
    demand in every direction. Labels and trajectory are separate
    layers: marking a waypoint never changes a label.
    """

    def __init__(
        self,
        cell_size: typing.Optional[float] = None,
        label_dict: typing.Optional[dict[Cell, int]] = None,
        trajectory: typing.Iterable[Cell] = tuple([]),
    ):
        if cell_size is None:
            cell_size = stmr_mapping.configurations.VOXEL_SIZE
        self.cell_size = float(cell_size)
        self.label_dict: dict[Cell, int] = {
            cell: label
            for cell, label in (label_dict or {}).items()
            if label != stmr_constants.UNEXPLORED
        }
        self._trajectory_dict: dict[Cell, None] = dict.fromkeys(trajectory)

    @classmethod
    def from_array(
        cls,
        label_array: np.ndarray,
        cell_size: typing.Optional[float] = None,
        offset: Cell = (0, 0),
        trajectory: typing.Iterable[Cell] = tuple([]),
    ) -> TopDownMap:
        """Build a map from a ``[j, i]`` indexed label array.

        :param offset: Cell index of the array element ``[0, 0]``.
        """
        label_array = np.asarray(label_array, dtype=int)
        label_dict = {
            (int(i) + offset[0], int(j) + offset[1]): int(label_array[j, i])
            for j, i in zip(*np.nonzero(label_array != stmr_constants.UNEXPLORED))
        }
        return cls(cell_size, label_dict, trajectory)

    def __repr_content__(self) -> str:
        return (
            f"cell_size={self.cell_size}, {len(self.label_dict)} explored cells, "
            f"{len(self._trajectory_dict)} waypoints"
        )

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, TopDownMap)
            and self.cell_size == other.cell_size
            and self.label_dict == other.label_dict
            and self.trajectory == other.trajectory
        )

    @property
    def trajectory(self) -> tuple[Cell, ...]:
        """Visited cells in the order of their first visit."""
        return tuple(self._trajectory_dict)

    def cell_index(self, x: float, y: float) -> Cell:
        return (math.floor(x / self.cell_size), math.floor(y / self.cell_size))

    def label_at(self, i: int, j: int) -> int:
        return self.label_dict.get((i, j), stmr_constants.UNEXPLORED)

    def is_trajectory(self, i: int, j: int) -> bool:
        return (i, j) in self._trajectory_dict

    def mark_waypoint(
        self,
        pose: stmr_parameters.UavPose,
        previous: typing.Optional[stmr_parameters.UavPose] = None,
    ) -> TopDownMap:
        """Flag the cells below the UAV as visited.

        :param pose: Where the UAV is now.
        :param previous: Where the UAV was before. If given, every cell
            which the ground track from ``previous`` to ``pose`` crosses
            is flagged, so that the trajectory stays connected even when
            one move is longer than a cell.
        :return: The map itself, which has been updated in place.

        **Example:**

        >>> from aerovln import stmr_mapping, stmr_parameters
        >>> top_down_map = stmr_mapping.TopDownMap(5)
        >>> start = stmr_parameters.UavPose(2.5, 2.5, 5)
        >>> top_down_map.mark_waypoint(start).mark_waypoint(
        ...     start.replace(x=12.5), previous=start
        ... ).trajectory
        ((0, 0), (1, 0), (2, 0))
        """
        if previous is not None:
            dx, dy = pose.x - previous.x, pose.y - previous.y
            for i, j, t_in, _ in stmr_worlds.walk_cells(
                previous.x, previous.y, dx, dy, self.cell_size, t_max=1
            ):
                # A track ending on a border touches the next cell at t = 1.
                if t_in < 1:
                    self._trajectory_dict.setdefault((i, j))
        self._trajectory_dict.setdefault(self.cell_index(pose.x, pose.y))
        return self

    def with_trajectory(self, trajectory: typing.Iterable[Cell]) -> TopDownMap:
        """New map with the labels of this map and the given trajectory."""
        return type(self)(self.cell_size, self.label_dict, trajectory)

    @property
    def index_bounds(self) -> typing.Optional[tuple[int, int, int, int]]:
        """``(i_min, j_min, i_max, j_max)`` of all known cells, inclusive."""
        cell_list = list(self.label_dict) + list(self._trajectory_dict)
        if not cell_list:
            return None
        i_tuple, j_tuple = zip(*cell_list)
        return min(i_tuple), min(j_tuple), max(i_tuple), max(j_tuple)

    def to_array(
        self, i_min: int, j_min: int, i_max: int, j_max: int
    ) -> tuple[np.ndarray, np.ndarray]:
        """Label and trajectory arrays of a cell range.

        :return: ``(labels, trajectory)`` arrays of shape
            ``(j_max - j_min + 1, i_max - i_min + 1)`` indexed ``[j, i]``
            relative to ``(i_min, j_min)``. Unknown cells are unexplored.
        """
        shape = (j_max - j_min + 1, i_max - i_min + 1)
        label_array = np.full(shape, stmr_constants.UNEXPLORED, dtype=int)
        trajectory_array = np.zeros(shape, dtype=bool)
        for (i, j), label in self.label_dict.items():
            if i_min <= i <= i_max and j_min <= j <= j_max:
                label_array[j - j_min, i - i_min] = label
        for i, j in self._trajectory_dict:
            if i_min <= i <= i_max and j_min <= j <= j_max:
                trajectory_array[j - j_min, i - i_min] = True
        return label_array, trajectory_array


def project_top_down(
    grid: stmr_mapping.VoxelGrid,
    subgoal_labels: typing.Iterable[int] = tuple([]),
    base_map: typing.Optional[TopDownMap] = None,
) -> TopDownMap:
    """Project the voxel grid to the ground plane.

    :param grid: The semantic voxel grid.
    :param subgoal_labels: Labels of the current sub-goal landmarks.
    :param base_map: If given, the trajectory layer of this map is
        carried over to the result.

    A column whose voxels contain a sub-goal category shows that
    category (the topmost one if there are several). Every other
    column shows the category of its highest voxel. Columns without
    voxels stay unexplored.

    **Example:**

    >>> from aerovln import stmr_geometry, stmr_mapping
    >>> grid = stmr_mapping.VoxelGrid().insert_points(
    ...     stmr_geometry.SemanticPointCloud.from_point_sequence(
    ...         [(1, 1, 1, 1), (1, 1, 16, 4)]
    ...     )
    ... )
    >>> stmr_mapping.project_top_down(grid).label_at(0, 0)
    4
    >>> stmr_mapping.project_top_down(grid, {1}).label_at(0, 0)
    1
    """
    subgoal_label_set = frozenset(subgoal_labels)
    top_dict: dict[Cell, tuple[int, int]] = {}
    subgoal_dict: dict[Cell, tuple[int, int]] = {}
    for (i, j, k), category in grid.category_dict.items():
        cell = (i, j)
        if cell not in top_dict or k > top_dict[cell][0]:
            top_dict[cell] = (k, category)
        if category in subgoal_label_set and (
            cell not in subgoal_dict or k > subgoal_dict[cell][0]
        ):
            subgoal_dict[cell] = (k, category)
    label_dict = {cell: category for cell, (_, category) in top_dict.items()}
    label_dict.update(
        {cell: category for cell, (_, category) in subgoal_dict.items()}
    )
    trajectory = base_map.trajectory if base_map is not None else tuple([])
    return TopDownMap(grid.voxel_size, label_dict, trajectory)


def mark_waypoint(
    map: TopDownMap,
    pose: stmr_parameters.UavPose,
    previous: typing.Optional[stmr_parameters.UavPose] = None,
) -> TopDownMap:
    """Flag the cells below the UAV, see :meth:`TopDownMap.mark_waypoint`."""
    return map.mark_waypoint(pose, previous)
