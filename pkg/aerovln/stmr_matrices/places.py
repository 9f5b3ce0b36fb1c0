# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Graph of visited places, the alternative topological representation."""

from __future__ import annotations

import math
import typing

from aerovln import stmr_constants
from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("Place", "PlaceGraph")


class Place(typing.NamedTuple):
    index: int
    position: stmr_constants.Point3D
    caption_tuple: tuple[str, ...]


class PlaceGraph(stmr_utilities.StmrObject):
    """Undirected graph of the places the UAV visited.

    :param merge_distance: Horizontal distance in meters below which a
        new position is merged into an existing place. Defaults to
        :const:`aerovln.stmr_matrices.configurations.CELL_METRIC`.

    Places are numbered in the order of their creation. Neighbours are
    kept in the order in which their edge was added.

    **Example:**

    >>> from aerovln import stmr_matrices, stmr_parameters
    >>> graph = stmr_matrices.PlaceGraph()
    >>> graph.visit(stmr_parameters.UavPose(0, 0, 5), ["road"])
    0
    >>> graph.visit(stmr_parameters.UavPose(20, 0, 5), ["river"])
    1
    >>> graph.neighbour_tuple(0)
    (1,)
    """

    def __init__(self, merge_distance: typing.Optional[float] = None):
        if merge_distance is None:
            merge_distance = stmr_matrices.configurations.CELL_METRIC
        self.merge_distance = float(merge_distance)
        self._place_list: list[Place] = []
        self._adjacency_list: list[dict[int, None]] = []
        self._current: typing.Optional[int] = None

    def __repr_content__(self) -> str:
        return f"{len(self)} places"

    def __len__(self) -> int:
        return len(self._place_list)

    def __iter__(self) -> typing.Iterator[Place]:
        return iter(self._place_list)

    def __getitem__(self, index: int) -> Place:
        return self._place_list[index]

    @property
    def current(self) -> typing.Optional[int]:
        """Index of the place the UAV is at."""
        return self._current

    def add_place(
        self,
        position: typing.Sequence[float],
        caption_collection: typing.Iterable[str] = tuple([]),
    ) -> int:
        """Add a new place without any edge and return its index."""
        index = len(self._place_list)
        self._place_list.append(
            Place(
                index,
                tuple(float(c) for c in position),  # type: ignore
                stmr_utilities.uniqify_sequence(caption_collection),
            )
        )
        self._adjacency_list.append({})
        return index

    def add_edge(self, index0: int, index1: int):
        """Connect two places. Self loops are ignored."""
        if index0 == index1:
            return
        for index in (index0, index1):
            if not 0 <= index < len(self):
                raise IndexError(f"Place {index} doesn't exist.")
        self._adjacency_list[index0].setdefault(index1)
        self._adjacency_list[index1].setdefault(index0)

    def neighbour_tuple(self, index: int) -> tuple[int, ...]:
        return tuple(self._adjacency_list[index])

    def nearest(self, x: float, y: float) -> typing.Optional[int]:
        """Index of the closest place within the merge distance or ``None``."""
        best_index, best_distance = None, self.merge_distance
        for place in self._place_list:
            distance = math.hypot(place.position[0] - x, place.position[1] - y)
            if distance < best_distance:
                best_index, best_distance = place.index, distance
        return best_index

    def visit(
        self,
        pose: stmr_parameters.UavPose,
        caption_collection: typing.Iterable[str] = tuple([]),
    ) -> int:
        """Record that the UAV is at a pose and saw some landmarks.

        A pose close to an existing place is merged into it and the
        new captions are appended. The place is connected with the place
        of the previous visit.
        """
        index = self.nearest(pose.x, pose.y)
        if index is None:
            index = self.add_place(pose.position, caption_collection)
        else:
            place = self._place_list[index]
            self._place_list[index] = place._replace(
                caption_tuple=stmr_utilities.uniqify_sequence(
                    (*place.caption_tuple, *caption_collection)
                )
            )
        if self._current is not None:
            self.add_edge(self._current, index)
        self._current = index
        return index
