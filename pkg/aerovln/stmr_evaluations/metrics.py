# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Navigation error, success and oracle success."""

from __future__ import annotations

import math
import typing

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_evaluations
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = (
    "navigation_error",
    "success",
    "oracle_success",
    "Summary",
    "aggregate",
)


def _point(point: stmr_constants.Point3D | stmr_parameters.UavPose) -> tuple:
    if isinstance(point, stmr_parameters.UavPose):
        return point.position
    return tuple(point)


def navigation_error(
    stop: stmr_constants.Point3D | stmr_parameters.UavPose,
    goal: stmr_constants.Point3D | stmr_parameters.UavPose,
) -> float:
    """3D distance between the stop point and the goal in meters.

    **Example:**

    >>> from aerovln import stmr_evaluations
    >>> stmr_evaluations.navigation_error((3, 4, 12), (0, 0, 0))
    13.0
    """
    return float(math.dist(_point(stop), _point(goal)))


def success(
    result: stmr_evaluations.EpisodeResult,
    success_distance: typing.Optional[float] = None,
) -> bool:
    """``True`` if the UAV decided to stop closer than the success distance.

    :param result: The finished episode.
    :param success_distance: Defaults to
        :const:`aerovln.stmr_evaluations.configurations.SUCCESS_DISTANCE`.
    """
    if success_distance is None:
        success_distance = stmr_evaluations.configurations.SUCCESS_DISTANCE
    return (
        result.stopped_by is stmr_evaluations.StoppedBy.STOP_ACTION
        and result.ne < success_distance
    )


def oracle_success(
    trajectory: typing.Sequence[stmr_parameters.UavPose],
    goal: stmr_constants.Point3D,
    success_distance: typing.Optional[float] = None,
) -> bool:
    """``True`` if the flight came closer than the success distance to the goal.

    :param trajectory: Poses of the flight, at least one.
    :param goal: The goal point.
    :param success_distance: Defaults to
        :const:`aerovln.stmr_evaluations.configurations.SUCCESS_DISTANCE`.

    The straight segments between consecutive poses count as well,
    so a fast flight can't skip over the goal area.

    **Example:**

    >>> from aerovln import stmr_evaluations, stmr_parameters
    >>> trajectory = [
    ...     stmr_parameters.UavPose(-50, 10, 0), stmr_parameters.UavPose(50, 10, 0)
    ... ]
    >>> stmr_evaluations.oracle_success(trajectory, (0, 0, 0))
    True
    """
    if success_distance is None:
        success_distance = stmr_evaluations.configurations.SUCCESS_DISTANCE
    point_array = np.array([pose.position for pose in trajectory], dtype=float)
    goal_array = np.array(goal, dtype=float)
    if len(point_array) == 1:
        return bool(np.linalg.norm(point_array[0] - goal_array) < success_distance)
    start_array, end_array = point_array[:-1], point_array[1:]
    direction_array = end_array - start_array
    length_array = np.einsum("ij,ij->i", direction_array, direction_array)
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.einsum("ij,ij->i", goal_array - start_array, direction_array) / (
            length_array
        )
    t = np.clip(np.nan_to_num(t), 0, 1)
    closest_array = start_array + t[:, None] * direction_array
    distance_array = np.linalg.norm(closest_array - goal_array, axis=1)
    return bool(distance_array.min() < success_distance)


class Summary(typing.NamedTuple):
    """Aggregated metrics of a set of episodes.

    ``navigation_error`` is the mean in meters, the rates are
    percentages.
    """

    episode_count: int
    navigation_error: float
    success_rate: float
    oracle_success_rate: float


def aggregate(
    results: typing.Iterable[stmr_evaluations.EpisodeResult],
) -> Summary:
    """Mean navigation error, success rate and oracle success rate.

    :raises: :class:`aerovln.stmr_utilities.EmptyResultSetError` if
        there aren't any results.
    """
    result_tuple = tuple(results)
    if not result_tuple:
        raise stmr_utilities.EmptyResultSetError()
    count = len(result_tuple)
    return Summary(
        count,
        sum(result.ne for result in result_tuple) / count,
        100 * sum(result.success for result in result_tuple) / count,
        100 * sum(result.oracle_success for result in result_tuple) / count,
    )
