# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Exact traversal of the scene grid along a line (DDA)."""

from __future__ import annotations

import math
import typing

from aerovln import stmr_worlds

__all__ = ("walk_cells", "traverse_cells")


def _next_border(origin, position, index, step, cell_size, direction):
    if step > 0:
        return (origin + (index + 1) * cell_size - position) / direction
    if step < 0:
        return (origin + index * cell_size - position) / direction
    return math.inf


def walk_cells(
    x: float,
    y: float,
    dx: float,
    dy: float,
    cell_size: float,
    origin: tuple[float, float] = (0, 0),
    t_max: float = math.inf,
    contains_index: typing.Optional[typing.Callable[[int, int], bool]] = None,
) -> typing.Iterator[tuple[int, int, float, float]]:
    """Visit the cells of a regular grid which a line crosses.

    :param x: Start position east coordinate.
    :param y: Start position north coordinate.
    :param dx: East component of the direction.
    :param dy: North component of the direction.
    :param cell_size: Side length of a cell in meters.
    :param origin: World position of the corner of cell ``(0, 0)``.
    :param t_max: Stop once the line parameter exceeds this value.
    :param contains_index: Stop once the line leaves the cells for which
        this returns ``True``. The grid is unbounded if ``None``.
    :return: Iterator of ``(i, j, t_in, t_out)`` where ``t_in`` and
        ``t_out`` are the line parameters at which the line enters and
        leaves cell ``(i, j)``.

    Cell borders are computed from the cell index each time, so that
    entry parameters don't accumulate rounding errors.

    **Example:**

    >>> from aerovln import stmr_worlds
    >>> [c[:2] for c in stmr_worlds.walk_cells(2.5, 2.5, 10, 5, 5, t_max=1)]
    [(0, 0), (1, 0), (1, 1), (2, 1)]
    """
    origin_x, origin_y = origin
    i = math.floor((x - origin_x) / cell_size)
    j = math.floor((y - origin_y) / cell_size)
    step_i = (dx > 0) - (dx < 0)
    step_j = (dy > 0) - (dy < 0)
    t_in = 0.0
    while t_in <= t_max and (contains_index is None or contains_index(i, j)):
        t_next_x = _next_border(origin_x, x, i, step_i, cell_size, dx)
        t_next_y = _next_border(origin_y, y, j, step_j, cell_size, dy)
        t_out = min(t_next_x, t_next_y)
        yield i, j, t_in, t_out
        if t_out == math.inf:
            return
        if t_next_x < t_next_y:
            i += step_i
        else:
            j += step_j
        t_in = t_out


def traverse_cells(
    scene: stmr_worlds.Scene,
    x: float,
    y: float,
    dx: float,
    dy: float,
    t_max: float = math.inf,
) -> typing.Iterator[tuple[int, int, float, float]]:
    """Visit all scene cells which the line ``(x, y) + t * (dx, dy)`` crosses.

    :param scene: The scene which defines the grid.
    :param x: Start position east coordinate.
    :param y: Start position north coordinate.
    :param dx: East component of the direction.
    :param dy: North component of the direction.
    :param t_max: Stop once the line parameter exceeds this value.
    :return: See :func:`walk_cells`. The iterator stops when the line
        leaves the grid.

    **Example:**

    >>> import numpy as np
    >>> from aerovln import stmr_worlds
    >>> scene = stmr_worlds.Scene(
    ...     5, np.zeros((1, 3)), np.ones((1, 3), dtype=int), {1: "road"}
    ... )
    >>> [c[:3] for c in stmr_worlds.traverse_cells(scene, 1, 1, 1, 0)]
    [(0, 0, 0.0), (1, 0, 4.0), (2, 0, 9.0)]
    """
    return walk_cells(
        x,
        y,
        dx,
        dy,
        scene.cell_size,
        scene.origin,
        t_max,
        scene.contains_index,
    )
