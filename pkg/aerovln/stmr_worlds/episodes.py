# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Navigation episodes and their ground truth actions."""

from __future__ import annotations

import math
import typing

import ranges

from aerovln import stmr_constants
from aerovln import stmr_parameters
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = ("Episode", "actions_between", "ground_truth_actions")


class Episode(stmr_utilities.StmrObject):
    """One navigation task.

    :param episode_id: Unique name of the episode.
    :param instruction: The natural language instruction.
    :param start: The start pose.
    :param goal: The target point ``(x, y, z)`` in meters.
    :param ground_truth_path: Poses of the reference flight. It begins
        with the start pose.
    :param max_actions: Count of actions after which the episode ends.
        Defaults to :const:`aerovln.stmr_worlds.configurations.DEFAULT_MAX_ACTIONS`.
    :param scene_name: Optional name of the scene the episode belongs to.
    :raises: :class:`aerovln.stmr_utilities.EpisodeParseError` if the
        episode is inconsistent.
    """

    def __init__(
        self,
        episode_id: str,
        instruction: str,
        start: stmr_parameters.UavPose,
        goal: typing.Sequence[float],
        ground_truth_path: typing.Sequence[stmr_parameters.UavPose],
        max_actions: typing.Optional[int] = None,
        scene_name: str = "",
    ):
        if max_actions is None:
            max_actions = stmr_worlds.configurations.DEFAULT_MAX_ACTIONS
        self.episode_id = str(episode_id).strip()
        self.instruction = " ".join(str(instruction).split())
        self.start = stmr_parameters.UavPose.from_any(start)
        self.goal: stmr_constants.Point3D = tuple(  # type: ignore
            float(c) for c in goal
        )
        self.ground_truth_path = tuple(
            stmr_parameters.UavPose.from_any(p) for p in ground_truth_path
        )
        self.max_actions = int(max_actions)
        self.scene_name = scene_name
        if not self.episode_id or any(
            c.isspace() or c in "/\\" for c in self.episode_id
        ):
            raise stmr_utilities.EpisodeParseError(
                f"invalid id '{episode_id}'", field="id"
            )
        if not self.instruction:
            raise stmr_utilities.EpisodeParseError(
                "instruction is empty", field="instruction"
            )
        if len(self.goal) != 3 or not all(math.isfinite(c) for c in self.goal):
            raise stmr_utilities.EpisodeParseError(
                f"goal {goal} isn't a finite 3D point", field="goal"
            )
        if not self.ground_truth_path:
            raise stmr_utilities.EpisodeParseError("path is empty", field="path")
        if self.ground_truth_path[0] != self.start:
            raise stmr_utilities.EpisodeParseError(
                "path has to begin at the start pose", field="path"
            )
        if self.max_actions < 1:
            raise stmr_utilities.EpisodeParseError(
                f"max_actions has to be >= 1, found {max_actions}",
                field="max_actions",
            )

    def __repr_content__(self) -> str:
        return self.episode_id

    def __eq__(self, other: typing.Any) -> bool:
        return isinstance(
            other, Episode
        ) and stmr_utilities.test_if_objects_are_equal_by_parameter_tuple(
            self,
            other,
            (
                "episode_id",
                "instruction",
                "start",
                "goal",
                "ground_truth_path",
                "max_actions",
                "scene_name",
            ),
        )

    @property
    def path_length(self) -> float:
        """Length of the ground truth path in meters."""
        return sum(
            math.dist(p0.position, p1.position)
            for p0, p1 in zip(self.ground_truth_path, self.ground_truth_path[1:])
        )

    @property
    def start_to_goal_distance(self) -> float:
        return self.start.distance_to(self.goal)

    def violation_tuple(self, scene: stmr_worlds.Scene) -> tuple[str, ...]:
        """Describe every way in which the episode doesn't fit the scene."""
        violation_list = []
        if (violation := scene.pose_violation(self.start)) is not None:
            violation_list.append(f"start: {violation}")
        if not scene.contains(self.goal[0], self.goal[1]):
            violation_list.append(
                f"goal: position {self.goal} is outside of {scene.bounds}"
            )
        for index, pose in enumerate(self.ground_truth_path[1:], 1):
            if (violation := scene.pose_violation(pose)) is not None:
                violation_list.append(f"path pose {index}: {violation}")
        return tuple(violation_list)


def _split(total: float, maximum: float) -> list[float]:
    """Split a positive amount into chunks of at most ``maximum``."""
    full_count = math.floor(total / maximum + 1e-9)
    chunk_list = [float(maximum)] * full_count
    rest = round(total - full_count * maximum, 9)
    if rest > 1e-6:
        chunk_list.append(min(rest, float(maximum)))
    return chunk_list


def actions_between(
    pose0: stmr_parameters.UavPose,
    pose1: stmr_parameters.UavPose,
    degree_range: typing.Optional[ranges.Range] = None,
    distance_range: typing.Optional[ranges.Range] = None,
) -> tuple[stmr_parameters.Action, ...]:
    """Actions which move the UAV from one pose to the next one.

    The UAV turns towards the target, flies in a straight line and
    finally turns to the target yaw. Climbing happens before and
    descending after the horizontal motion.

    **Example:**

    >>> from aerovln import stmr_parameters, stmr_worlds
    >>> action_tuple = stmr_worlds.actions_between(
    ...     stmr_parameters.UavPose(0, 0, 5), stmr_parameters.UavPose(25, 0, 5)
    ... )
    >>> [(a.verb.value, a.distance) for a in action_tuple]
    [('straight', 10.0), ('straight', 10.0), ('straight', 5.0)]
    """
    if degree_range is None:
        degree_range = stmr_parameters.configurations.DEGREE_RANGE
    if distance_range is None:
        distance_range = stmr_parameters.configurations.DISTANCE_RANGE
    max_degree, max_distance = degree_range.end, distance_range.end
    Verb = stmr_parameters.ActionVerb

    def action(verb, degree=0, distance=0):
        return stmr_parameters.Action(
            verb,
            degree,
            distance,
            degree_range=degree_range,
            distance_range=distance_range,
        )

    def turn(current_yaw, target_yaw):
        delta = math.degrees(stmr_utilities.wrap_angle(target_yaw - current_yaw))
        verb = Verb.LEFT if delta > 0 else Verb.RIGHT
        if abs(delta) < 1e-6:
            return []
        return [action(verb, chunk) for chunk in _split(abs(delta), max_degree)]

    def vertical(dz):
        if abs(dz) < 1e-6:
            return []
        verb = Verb.LIFT if dz > 0 else Verb.DOWN
        return [action(verb, 0, chunk) for chunk in _split(abs(dz), max_distance)]

    action_list = []
    dz = pose1.z - pose0.z
    if dz > 0:
        action_list.extend(vertical(dz))
    yaw = pose0.yaw
    dx, dy = pose1.x - pose0.x, pose1.y - pose0.y
    horizontal_distance = math.hypot(dx, dy)
    if horizontal_distance > 1e-6:
        heading = math.atan2(dy, dx)
        action_list.extend(turn(yaw, heading))
        yaw = heading
        action_list.extend(
            action(Verb.STRAIGHT, 0, chunk)
            for chunk in _split(horizontal_distance, max_distance)
        )
    if dz < 0:
        action_list.extend(vertical(dz))
    action_list.extend(turn(yaw, pose1.yaw))
    return tuple(action_list)


def ground_truth_actions(
    episode: Episode,
    degree_range: typing.Optional[ranges.Range] = None,
    distance_range: typing.Optional[ranges.Range] = None,
) -> tuple[stmr_parameters.Action, ...]:
    """Actions which follow the ground truth path and stop at its end."""
    path = episode.ground_truth_path
    action_list = []
    for pose0, pose1 in zip(path, path[1:]):
        action_list.extend(actions_between(pose0, pose1, degree_range, distance_range))
    action_list.append(
        stmr_parameters.Action(
            stmr_parameters.ActionVerb.STOP,
            degree_range=degree_range,
            distance_range=distance_range,
        )
    )
    return tuple(action_list)
