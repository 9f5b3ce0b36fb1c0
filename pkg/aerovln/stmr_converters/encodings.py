# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Alternative spatial encodings: a place graph and egocentric landmark lists."""

from __future__ import annotations

import math
import typing

from aerovln import stmr_converters
from aerovln import stmr_matrices
from aerovln import stmr_perception

__all__ = (
    "PlaceGraphToText",
    "LandmarkObservationsToText",
    "encode_topo",
    "encode_metric",
    "sector_name",
)


class PlaceGraphToText(stmr_converters.abc.Converter):
    """Describe the visited places and how they are connected.

    Each place gets one caption line. A connection sentence follows
    for each place whose neighbours include an edge which no earlier
    sentence stated. Neighbours are listed in the order of their
    connection. The last line names the current place.

    **Example:**

    >>> from aerovln import stmr_converters, stmr_matrices, stmr_parameters
    >>> graph = stmr_matrices.PlaceGraph()
    >>> for x, caption in ((0, "road"), (20, "river"), (40, "bridge")):
    ...     _ = graph.visit(stmr_parameters.UavPose(x, 0, 5), [caption])
    >>> print(stmr_converters.PlaceGraphToText()(graph))
    Place 0: road.
    Place 1: river.
    Place 2: bridge.
    Place 0 is connected with Place 1.
    Place 1 is connected with Places 0, 2.
    You are at Place 2.
    """

    def convert(self, place_graph_to_convert: stmr_matrices.PlaceGraph) -> str:
        graph = place_graph_to_convert
        line_list = [
            f"Place {place.index}: "
            f"{', '.join(place.caption_tuple) or 'no landmarks'}."
            for place in graph
        ]
        stated_edge_set: set[frozenset[int]] = set()
        for place in graph:
            neighbour_tuple = graph.neighbour_tuple(place.index)
            edge_set = {frozenset((place.index, n)) for n in neighbour_tuple}
            if not edge_set - stated_edge_set:
                continue
            stated_edge_set |= edge_set
            noun = "Place" if len(neighbour_tuple) == 1 else "Places"
            line_list.append(
                f"Place {place.index} is connected with {noun} "
                f"{', '.join(map(str, neighbour_tuple))}."
            )
        if graph.current is not None:
            line_list.append(f"You are at Place {graph.current}.")
        return "\n".join(line_list)


def sector_name(bearing: float) -> str:
    """Name of the 45° direction sector of a bearing in degrees.

    **Example:**

    >>> from aerovln import stmr_converters
    >>> stmr_converters.sector_name(45), stmr_converters.sector_name(-90)
    ('right front', 'left')
    """
    sector_name_tuple = stmr_converters.configurations.SECTOR_NAME_TUPLE
    size = 360 / len(sector_name_tuple)
    return sector_name_tuple[
        math.floor((bearing + size / 2) / size) % len(sector_name_tuple)
    ]


class LandmarkObservationsToText(stmr_converters.abc.Converter):
    """List landmarks with direction and distance, clockwise from the front.

    **Example:**

    >>> from aerovln import stmr_converters, stmr_perception
    >>> print(stmr_converters.LandmarkObservationsToText()([
    ...     stmr_perception.LandmarkObservation("building", 45, 10),
    ...     stmr_perception.LandmarkObservation("road", 0, 5),
    ... ]))
    a road in the front 5 meters away
    a building in the right front 10 meters away
    """

    def _sort_key(
        self, observation: stmr_perception.LandmarkObservation
    ) -> tuple[float, float]:
        size = 360 / len(stmr_converters.configurations.SECTOR_NAME_TUPLE)
        shifted = (observation.bearing + size / 2) % 360
        return shifted, observation.distance

    def convert(
        self,
        observations_to_convert: typing.Iterable[
            stmr_perception.LandmarkObservation
        ],
    ) -> str:
        observation_list = sorted(observations_to_convert, key=self._sort_key)
        if not observation_list:
            return "no landmarks in sight"
        return "\n".join(
            f"{'an' if o.name[:1].lower() in tuple('aeiou') else 'a'} {o.name} in the "
            f"{sector_name(o.bearing)} {round(o.distance)} meters away"
            for o in observation_list
        )


def encode_topo(place_graph: stmr_matrices.PlaceGraph) -> str:
    """Describe a place graph, see :class:`PlaceGraphToText`."""
    return PlaceGraphToText()(place_graph)


def encode_metric(
    observations: typing.Iterable[stmr_perception.LandmarkObservation],
) -> str:
    """Describe landmark observations, see :class:`LandmarkObservationsToText`."""
    return LandmarkObservationsToText()(observations)
