# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Semantic heightmap scenes."""

from __future__ import annotations

import math
import typing

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_parameters
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = ("Scene",)


class Scene(stmr_utilities.StmrObject):
    """A 2.5D world made of grid cells with a height and a semantic id.

    :param cell_size: Side length of a grid cell in meters.
    :param height: ``(rows, columns)`` array of terrain or building top
        heights in meters. Row ``0`` is the southernmost row, so the
        array is indexed ``[j, i]`` where ``i`` grows to the east and
        ``j`` to the north.
    :param label: Semantic id of each cell, same shape as ``height``.
    :param legend: Maps every semantic id to its category name.
    :param origin: World coordinate of the south-west corner of cell
        ``(0, 0)``.
    :param canopy_bottom: Optional lower border of a canopy band per
        cell in meters.
    :param canopy_top: Optional upper border of a canopy band per cell.
    :param canopy_label: Optional semantic id of the canopy per cell.
        ``0`` means the cell has no canopy. A canopy band is solid,
        whatever lies below it is only visible from below the band.
    :param ceiling: Highest altitude the UAV may reach. Defaults to
        :const:`aerovln.stmr_worlds.configurations.DEFAULT_CEILING`.
    :param name: Optional name of the scene.
    :raises: :class:`aerovln.stmr_utilities.SceneParseError` if the
        scene is inconsistent.

    The scene is immutable after initialisation and can therefore be
    shared between concurrently running episodes.

    **Example:**

    >>> import numpy as np
    >>> from aerovln import stmr_worlds
    >>> scene = stmr_worlds.Scene(
    ...     5, np.zeros((2, 2)), np.ones((2, 2), dtype=int), {1: "road"}
    ... )
    >>> scene.bounds
    (0.0, 0.0, 10.0, 10.0)
    """

    def __init__(
        self,
        cell_size: float,
        height: np.ndarray,
        label: np.ndarray,
        legend: dict[int, str],
        origin: tuple[float, float] = (0.0, 0.0),
        canopy_bottom: typing.Optional[np.ndarray] = None,
        canopy_top: typing.Optional[np.ndarray] = None,
        canopy_label: typing.Optional[np.ndarray] = None,
        ceiling: typing.Optional[float] = None,
        name: str = "",
    ):
        if ceiling is None:
            ceiling = stmr_worlds.configurations.DEFAULT_CEILING
        self.cell_size = float(cell_size)
        self.height = np.array(height, dtype=float)
        self.label = np.array(label, dtype=int)
        self.legend = {int(k): str(v).strip().lower() for k, v in legend.items()}
        self.origin = (float(origin[0]), float(origin[1]))
        self.ceiling = float(ceiling)
        self.name = name
        canopy_tuple = (canopy_bottom, canopy_top, canopy_label)
        if any(c is not None for c in canopy_tuple):
            if not all(c is not None for c in canopy_tuple):
                raise stmr_utilities.SceneParseError(
                    "canopy_bottom, canopy_top and canopy_label have to be "
                    "given together",
                    field="canopy_label",
                )
            self.canopy_bottom = np.array(canopy_bottom, dtype=float)
            self.canopy_top = np.array(canopy_top, dtype=float)
            self.canopy_label = np.array(canopy_label, dtype=int)
        else:
            self.canopy_bottom = np.zeros_like(self.height)
            self.canopy_top = np.zeros_like(self.height)
            self.canopy_label = np.zeros_like(self.label)
        violation = next(iter(self.violation_tuple()), None)
        if violation is not None:
            raise stmr_utilities.SceneParseError(*violation)
        for array in (
            self.height,
            self.label,
            self.canopy_bottom,
            self.canopy_top,
            self.canopy_label,
        ):
            array.flags.writeable = False
        self.max_surface_height = float(
            max(self.height.max(), self.canopy_top.max())
        )

    # ###################################################################### #
    #                          validation                                    #
    # ###################################################################### #

    def violation_tuple(self) -> tuple[tuple[str, None, str], ...]:
        """Collect all consistency violations as ``(message, None, field)``."""
        violation_list = []

        def add(message, field):
            violation_list.append((message, None, field))

        if not (math.isfinite(self.cell_size) and self.cell_size > 0):
            add(f"cell size has to be > 0, found {self.cell_size}", "cell_size")
        if self.height.ndim != 2 or self.height.size == 0:
            add("height has to be a non-empty 2D grid", "height")
            return tuple(violation_list)
        for field, array in (
            ("label", self.label),
            ("canopy_bottom", self.canopy_bottom),
            ("canopy_top", self.canopy_top),
            ("canopy_label", self.canopy_label),
        ):
            if array.shape != self.height.shape:
                add(
                    f"shape {array.shape} doesn't match height shape "
                    f"{self.height.shape}",
                    field,
                )
        if violation_list:
            return tuple(violation_list)
        if not np.all(np.isfinite(self.height)) or np.any(self.height < 0):
            add("heights have to be finite and >= 0", "height")
        for label_id, name in self.legend.items():
            if label_id in (stmr_constants.UNEXPLORED, stmr_constants.TRAJECTORY):
                add(f"label id {label_id} is reserved", "legend")
            if not name:
                add(f"label id {label_id} has an empty name", "legend")
        for field, array, mask in (
            ("label", self.label, np.ones_like(self.label, dtype=bool)),
            ("canopy_label", self.canopy_label, self.canopy_label != 0),
        ):
            unknown = mask & ~np.isin(array, list(self.legend))
            for j, i in zip(*np.nonzero(unknown)):
                add(
                    f"label id {array[j, i]} of cell ({i}, {j}) is missing "
                    "from the legend",
                    field,
                )
        canopy = self.canopy_label != 0
        broken = canopy & ~(
            (self.canopy_bottom < self.canopy_top)
            & (self.canopy_bottom >= self.height)
        )
        for j, i in zip(*np.nonzero(broken)):
            add(
                f"canopy band of cell ({i}, {j}) has to lie above the "
                "terrain and needs bottom < top",
                "canopy_bottom",
            )
        if self.ceiling <= max(self.height.max(), self.canopy_top.max()):
            add("ceiling has to be above every surface", "ceiling")
        return tuple(violation_list)

    def pose_violation(self, pose: stmr_parameters.UavPose) -> typing.Optional[str]:
        """Explain why the UAV can't be at the pose or return ``None``."""
        if not self.contains(pose.x, pose.y):
            return f"position ({pose.x}, {pose.y}) is outside of {self.bounds}"
        if not self.is_free(pose.x, pose.y, pose.z):
            return f"position {pose.position} lies inside an obstacle"
        return None

    def validate_pose(self, pose: stmr_parameters.UavPose):
        """Raise if the UAV can't be at the pose.

        :raises: :class:`aerovln.stmr_utilities.PoseOutOfBoundsError`
        """
        if self.pose_violation(pose) is not None:
            raise stmr_utilities.PoseOutOfBoundsError(pose, self.bounds)

    # ###################################################################### #
    #                          public api                                    #
    # ###################################################################### #

    @property
    def shape(self) -> tuple[int, int]:
        """``(rows, columns)`` of the grid."""
        return self.height.shape  # type: ignore

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        """``(x_min, y_min, x_max, y_max)`` of the world extent."""
        rows, columns = self.shape
        x, y = self.origin
        return (
            x,
            y,
            x + columns * self.cell_size,
            y + rows * self.cell_size,
        )

    @property
    def has_canopy(self) -> bool:
        return bool(np.any(self.canopy_label != 0))

    def cell_index(self, x: float, y: float) -> tuple[int, int]:
        """Grid index ``(i, j)`` of the cell containing ``(x, y)``."""
        return (
            math.floor((x - self.origin[0]) / self.cell_size),
            math.floor((y - self.origin[1]) / self.cell_size),
        )

    def contains_index(self, i: int, j: int) -> bool:
        rows, columns = self.shape
        return 0 <= i < columns and 0 <= j < rows

    def contains(self, x: float, y: float) -> bool:
        x_min, y_min, x_max, y_max = self.bounds
        return x_min <= x < x_max and y_min <= y < y_max

    def is_solid_at(self, i: int, j: int, z: float) -> bool:
        """Test if altitude ``z`` is inside the column or the canopy of a cell."""
        if z <= self.height[j, i]:
            return True
        return bool(
            self.canopy_label[j, i] != 0
            and self.canopy_bottom[j, i] <= z <= self.canopy_top[j, i]
        )

    def is_free(self, x: float, y: float, z: float) -> bool:
        """Test if the UAV may be at the position."""
        if not (self.contains(x, y) and z <= self.ceiling):
            return False
        i, j = self.cell_index(x, y)
        return not self.is_solid_at(i, j, z)

    def visible_label_at(self, i: int, j: int) -> int:
        """Label which is seen from above: canopy if present, else ground."""
        canopy_label = int(self.canopy_label[j, i])
        return canopy_label if canopy_label else int(self.label[j, i])

    def category_id(self, name: str) -> typing.Optional[int]:
        """Label id of a category name or ``None``."""
        name = name.strip().lower()
        for label_id, legend_name in self.legend.items():
            if legend_name == name:
                return label_id
        return None

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, Scene)
            and self.cell_size == other.cell_size
            and self.origin == other.origin
            and self.legend == other.legend
            and self.ceiling == other.ceiling
            and all(
                np.array_equal(getattr(self, name), getattr(other, name))
                for name in (
                    "height",
                    "label",
                    "canopy_bottom",
                    "canopy_top",
                    "canopy_label",
                )
            )
        )

    def __repr_content__(self) -> str:
        return (
            f"{self.name or 'unnamed'}, shape={self.shape}, "
            f"cell_size={self.cell_size}"
        )
