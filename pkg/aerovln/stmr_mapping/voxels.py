# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Sparse voxel grid which counts semantic labels per voxel."""

from __future__ import annotations

import typing

import numpy as np

from aerovln import stmr_geometry
from aerovln import stmr_mapping
from aerovln import stmr_utilities

__all__ = ("Voxel", "VoxelGrid", "insert_points")

Voxel: typing.TypeAlias = tuple[int, int, int]


class VoxelGrid(stmr_utilities.StmrObject):
    """Unbounded grid of cubic voxels with a label histogram each.

    :param voxel_size: Side length of a voxel in meters. Defaults to
        :const:`aerovln.stmr_mapping.configurations.VOXEL_SIZE`.
    :param registered_labels: If given, inserting a point with another
        label raises :class:`aerovln.stmr_utilities.UnregisteredLabelError`.

    Voxel ``(i, j, k)`` covers ``[i·s, (i+1)·s) x [j·s, (j+1)·s) x
    [k·s, (k+1)·s)`` for voxel size ``s``. The category of a voxel is
    the label with the highest count; the lower id wins ties.

    **Example:**

    >>> from aerovln import stmr_geometry, stmr_mapping
    >>> grid = stmr_mapping.VoxelGrid()
    >>> grid = grid.insert_points(
    ...     stmr_geometry.SemanticPointCloud.from_point_sequence(
    ...         [(1, 1, 1, 2), (2, 2, 2, 2), (3, 3, 3, 1)]
    ...     )
    ... )
    >>> grid.category((0, 0, 0))
    2
    """

    def __init__(
        self,
        voxel_size: typing.Optional[float] = None,
        registered_labels: typing.Optional[typing.Iterable[int]] = None,
    ):
        if voxel_size is None:
            voxel_size = stmr_mapping.configurations.VOXEL_SIZE
        if not voxel_size > 0:
            raise ValueError(f"Voxel size has to be > 0, found {voxel_size}.")
        self.voxel_size = float(voxel_size)
        self.registered_label_set = (
            None if registered_labels is None else frozenset(registered_labels)
        )
        self._histogram_dict: dict[Voxel, dict[int, int]] = {}
        self._category_dict: dict[Voxel, int] = {}

    def __repr_content__(self) -> str:
        return f"voxel_size={self.voxel_size}, {len(self)} voxels"

    def __len__(self) -> int:
        return len(self._histogram_dict)

    def __contains__(self, voxel: typing.Any) -> bool:
        return voxel in self._histogram_dict

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, VoxelGrid)
            and self.voxel_size == other.voxel_size
            and self._histogram_dict == other._histogram_dict
        )

    @staticmethod
    def _winner(histogram: dict[int, int]) -> int:
        return min(histogram.items(), key=lambda item: (-item[1], item[0]))[0]

    def voxel_of(self, x: float, y: float, z: float) -> Voxel:
        """Index of the voxel which contains a point."""
        s = self.voxel_size
        return (int(np.floor(x / s)), int(np.floor(y / s)), int(np.floor(z / s)))

    def insert_points(self, cloud: stmr_geometry.SemanticPointCloud) -> VoxelGrid:
        """Count every point of the cloud in its voxel.

        :return: The grid itself, which has been updated in place.
        :raises: :class:`aerovln.stmr_utilities.UnregisteredLabelError`
        """
        if self.registered_label_set is not None:
            cloud.validate_labels(self.registered_label_set)
        if not len(cloud):
            return self
        index_array = np.floor(cloud.points / self.voxel_size).astype(int)
        key_array = np.column_stack((index_array, cloud.labels))
        row_array, count_array = np.unique(key_array, axis=0, return_counts=True)
        touched_set = set()
        for (i, j, k, label), count in zip(row_array.tolist(), count_array.tolist()):
            histogram = self._histogram_dict.setdefault((i, j, k), {})
            histogram[label] = histogram.get(label, 0) + count
            touched_set.add((i, j, k))
        for voxel in touched_set:
            self._category_dict[voxel] = self._winner(self._histogram_dict[voxel])
        return self

    def histogram(self, voxel: Voxel) -> dict[int, int]:
        """Copy of the label counts of a voxel (empty for unknown voxels)."""
        return dict(self._histogram_dict.get(voxel, {}))

    def category(self, voxel: Voxel) -> typing.Optional[int]:
        """Effective category of a voxel or ``None`` if it is empty."""
        return self._category_dict.get(voxel)

    @property
    def category_dict(self) -> dict[Voxel, int]:
        """Effective category of every occupied voxel."""
        return dict(self._category_dict)


def insert_points(
    grid: VoxelGrid, cloud: stmr_geometry.SemanticPointCloud
) -> VoxelGrid:
    """Add a point cloud to a voxel grid, see :meth:`VoxelGrid.insert_points`."""
    return grid.insert_points(cloud)
