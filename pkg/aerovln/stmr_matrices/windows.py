# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Cut the world aligned local window around the UAV."""

from __future__ import annotations

import math
import typing

import numpy as np

from aerovln import stmr_mapping
from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("LocalWindow", "extract_local_window", "orientation_token")


class LocalWindow(typing.NamedTuple):
    """Square part of the top-down map around the UAV.

    Arrays are ordered north-first: row ``0`` is the northernmost row,
    column ``0`` the westernmost column. ``block_size`` source cells
    along each side form one matrix cell.
    """

    label_array: np.ndarray
    trajectory_array: np.ndarray
    block_size: int
    matrix_size: int
    x_range: tuple[float, float]
    y_range: tuple[float, float]


def _block_size(cell_metric: float, cell_size: float) -> int:
    block_size = cell_metric / cell_size
    if block_size < 1 or not math.isclose(block_size, round(block_size)):
        raise ValueError(
            f"Matrix cell metric {cell_metric} has to be a multiple of the "
            f"map cell size {cell_size}."
        )
    return int(round(block_size))


def extract_local_window(
    map: stmr_mapping.TopDownMap,
    pose: stmr_parameters.UavPose,
    matrix_size: typing.Optional[int] = None,
    cell_metric: typing.Optional[float] = None,
) -> LocalWindow:
    """Cut the window of ``matrix_size`` x ``matrix_size`` matrix cells.

    :param map: The top-down map.
    :param pose: The UAV pose.
    :param matrix_size: Side of the matrix. Defaults to
        :const:`aerovln.stmr_matrices.configurations.MATRIX_SIZE`.
    :param cell_metric: Meters per matrix cell. It has to be a multiple
        of the map cell size. Defaults to
        :const:`aerovln.stmr_matrices.configurations.CELL_METRIC`.

    The window is aligned to the world axes and not rotated with the
    UAV. Matrix cells are anchored at the world origin, the UAV's
    matrix cell ends up at ``[size // 2, size // 2]``. Therefore the
    window reaches ``size // 2`` cells to the west and
    ``size // 2 - 1`` cells to the east of the UAV, ``size // 2`` cells
    to the north and ``size // 2 - 1`` cells to the south.

    **Example:**

    >>> from aerovln import stmr_mapping, stmr_matrices, stmr_parameters
    >>> window = stmr_matrices.extract_local_window(
    ...     stmr_mapping.TopDownMap(), stmr_parameters.UavPose(0, 0, 10)
    ... )
    >>> window.x_range, window.y_range
    ((-50.0, 50.0), (-45.0, 55.0))
    """
    configurations = stmr_matrices.configurations
    if matrix_size is None:
        matrix_size = configurations.MATRIX_SIZE
    if cell_metric is None:
        cell_metric = configurations.CELL_METRIC
    if matrix_size < 2 or matrix_size % 2:
        raise ValueError(f"Matrix size has to be even and >= 2, found {matrix_size}.")
    block_size = _block_size(cell_metric, map.cell_size)
    half = matrix_size // 2
    mi = math.floor(pose.x / cell_metric)
    mj = math.floor(pose.y / cell_metric)
    i_min = (mi - half) * block_size
    i_max = (mi + half) * block_size - 1
    j_min = (mj - half + 1) * block_size
    j_max = (mj + half + 1) * block_size - 1
    label_array, trajectory_array = map.to_array(i_min, j_min, i_max, j_max)
    return LocalWindow(
        np.flipud(label_array),
        np.flipud(trajectory_array),
        block_size,
        matrix_size,
        ((mi - half) * cell_metric, (mi + half) * cell_metric),
        ((mj - half + 1) * cell_metric, (mj + half + 1) * cell_metric),
    )


def orientation_token(pose: stmr_parameters.UavPose) -> str:
    """Compass direction of the heading plus the pitch in whole degrees.

    The yaw falls into one of eight 45° sectors centred on the compass
    directions. The pitch is rounded to whole degrees (half to even).

    **Example:**

    >>> import math
    >>> from aerovln import stmr_matrices, stmr_parameters
    >>> stmr_matrices.orientation_token(stmr_parameters.UavPose(0, 0, 5, yaw=math.pi))
    'west0'
    """
    compass_name_tuple = stmr_matrices.configurations.COMPASS_NAME_TUPLE
    sector_size = 2 * math.pi / len(compass_name_tuple)
    yaw = stmr_utilities.normalize_angle(pose.yaw)
    index = math.floor((yaw + sector_size / 2) / sector_size) % len(
        compass_name_tuple
    )
    pitch = int(round(math.degrees(pose.pitch)))
    return f"{compass_name_tuple[index]}{pitch}"
