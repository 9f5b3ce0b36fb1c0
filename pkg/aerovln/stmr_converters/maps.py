# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Render top-down maps for inspection."""

from __future__ import annotations

import typing

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_converters
from aerovln import stmr_mapping
from aerovln import stmr_parameters

__all__ = ("TopDownMapToAscii", "TopDownMapToPgm")


def _layer_tuple(
    map: stmr_mapping.TopDownMap, pose: typing.Optional[stmr_parameters.UavPose]
) -> typing.Optional[tuple[np.ndarray, np.ndarray, typing.Optional[tuple[int, int]]]]:
    """North-first label and trajectory arrays plus the UAV ``(row, column)``."""
    bounds = map.index_bounds
    uav_cell = map.cell_index(pose.x, pose.y) if pose is not None else None
    if uav_cell is not None:
        i, j = uav_cell
        if bounds is None:
            bounds = (i, j, i, j)
        else:
            bounds = (
                min(bounds[0], i),
                min(bounds[1], j),
                max(bounds[2], i),
                max(bounds[3], j),
            )
    if bounds is None:
        return None
    i_min, j_min, i_max, j_max = bounds
    label_array, trajectory_array = map.to_array(i_min, j_min, i_max, j_max)
    uav_position = None
    if uav_cell is not None:
        uav_position = (j_max - uav_cell[1], uav_cell[0] - i_min)
    return np.flipud(label_array), np.flipud(trajectory_array), uav_position


class TopDownMapToAscii(stmr_converters.abc.Converter):
    """Draw a map with one character per cell, north at the top.

    Unexplored cells are ``.``, visited cells ``*`` and the UAV cell
    ``@``. Semantic ids are drawn as ``1`` to ``9`` and then as capital
    letters.

    **Example:**

    >>> from aerovln import stmr_converters, stmr_mapping, stmr_parameters
    >>> map = stmr_mapping.TopDownMap(5, {(0, 0): 1, (1, 0): 2}, [(0, 0)])
    >>> print(stmr_converters.TopDownMapToAscii()(
    ...     map, stmr_parameters.UavPose(7, 7, 5)
    ... ))
    .@
    *2
    """

    def _character(self, label: int) -> str:
        character_string = stmr_converters.configurations.ASCII_LABEL_CHARACTERS
        if label == stmr_constants.UNEXPLORED:
            return stmr_converters.configurations.ASCII_UNEXPLORED
        if 1 <= label <= len(character_string):
            return character_string[label - 1]
        return "#"

    def convert(
        self,
        map_to_convert: stmr_mapping.TopDownMap,
        pose: typing.Optional[stmr_parameters.UavPose] = None,
    ) -> str:
        configurations = stmr_converters.configurations
        layer_tuple = _layer_tuple(map_to_convert, pose)
        if layer_tuple is None:
            return ""
        label_array, trajectory_array, uav_position = layer_tuple
        row_list = []
        for row, (label_row, trajectory_row) in enumerate(
            zip(label_array.tolist(), trajectory_array.tolist())
        ):
            character_list = [
                configurations.ASCII_TRAJECTORY if visited else self._character(label)
                for label, visited in zip(label_row, trajectory_row)
            ]
            if uav_position is not None and uav_position[0] == row:
                character_list[uav_position[1]] = configurations.ASCII_UAV
            row_list.append("".join(character_list))
        return "\n".join(row_list)


class TopDownMapToPgm(stmr_converters.abc.Converter):
    """Write a map as plain portable graymap (``P2``), north at the top.

    Unexplored cells are black, the UAV cell is white and visited cells
    are light gray. Semantic ids spread over the grays in between.
    """

    def convert(
        self,
        map_to_convert: stmr_mapping.TopDownMap,
        pose: typing.Optional[stmr_parameters.UavPose] = None,
    ) -> str:
        max_value = stmr_converters.configurations.PGM_MAX_VALUE
        layer_tuple = _layer_tuple(map_to_convert, pose)
        if layer_tuple is None:
            label_array = np.zeros((1, 1), dtype=int)
            trajectory_array = np.zeros((1, 1), dtype=bool)
            uav_position = None
        else:
            label_array, trajectory_array, uav_position = layer_tuple
        max_label = max(int(label_array.max()), 1)
        gray_array = np.where(
            label_array > 0,
            np.round(max_value * (0.2 + 0.6 * label_array / max_label)).astype(int),
            0,
        )
        gray_array[trajectory_array] = round(max_value * 0.9)
        if uav_position is not None:
            gray_array[uav_position] = max_value
        height, width = gray_array.shape
        return "\n".join(
            ["P2", f"{width} {height}", str(max_value)]
            + [" ".join(map(str, row)) for row in gray_array.tolist()]
        ) + "\n"
