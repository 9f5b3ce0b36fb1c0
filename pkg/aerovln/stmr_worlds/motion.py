# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Execute actions and clip motions at obstacles and scene borders."""

from __future__ import annotations

import math
import typing

from aerovln import stmr_parameters
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = ("MotionResult", "apply_action")


class MotionResult(typing.NamedTuple):
    """Outcome of :func:`apply_action`."""

    pose: stmr_parameters.UavPose
    collided: bool


def _horizontal_contact(
    scene: stmr_worlds.Scene,
    pose: stmr_parameters.UavPose,
    dx: float,
    dy: float,
    distance: float,
) -> typing.Optional[float]:
    last_t_out = 0.0
    for i, j, t_in, t_out in stmr_worlds.traverse_cells(
        scene, pose.x, pose.y, dx, dy, distance
    ):
        if scene.is_solid_at(i, j, pose.z):
            return max(t_in, 0.0)
        last_t_out = t_out
    # The line left the grid before reaching the target.
    if last_t_out <= distance:
        return last_t_out
    return None


def _vertical_contact(
    scene: stmr_worlds.Scene, pose: stmr_parameters.UavPose, sign: int
) -> tuple[float, bool]:
    """Distance to the vertical limit and whether the limit itself is free."""
    i, j = scene.cell_index(pose.x, pose.y)
    has_canopy = bool(scene.canopy_label[j, i])
    bottom, top = scene.canopy_bottom[j, i], scene.canopy_top[j, i]
    if sign > 0:
        if has_canopy and pose.z < bottom <= scene.ceiling:
            return float(bottom - pose.z), False
        return float(scene.ceiling - pose.z), True
    limit = scene.height[j, i]
    if has_canopy and top < pose.z:
        limit = max(limit, top)
    return float(pose.z - limit), False


def apply_action(
    scene: stmr_worlds.Scene,
    pose: stmr_parameters.UavPose,
    action: stmr_parameters.Action,
    margin: typing.Optional[float] = None,
) -> MotionResult:
    """Move the UAV according to an action.

    :param scene: The scene.
    :param pose: The current pose.
    :param action: The action to execute.
    :param margin: Distance which a clipped motion keeps to the
        obstacle. Defaults to
        :const:`aerovln.stmr_worlds.configurations.COLLISION_MARGIN`.
    :return: The new pose and whether the motion was clipped.

    ``right`` and ``left`` first rotate the yaw by ``degree`` and then
    move ``distance`` along the new heading. ``straight`` and ``back``
    move along the heading, ``lift`` and ``down`` move vertically and
    ``stop`` returns the unchanged pose. A motion which runs into an
    obstacle, the ceiling, the ground or the scene border stops
    ``margin`` meters before the contact point. The ceiling itself is
    free space: a lift which ends exactly there isn't clipped.

    **Example:**

    >>> import numpy as np
    >>> from aerovln import stmr_parameters, stmr_worlds
    >>> scene = stmr_worlds.Scene(
    ...     5, np.zeros((8, 8)), np.ones((8, 8), dtype=int), {1: "road"},
    ...     origin=(-20, -20),
    ... )
    >>> result = stmr_worlds.apply_action(
    ...     scene,
    ...     stmr_parameters.UavPose(0, 0, 10),
    ...     stmr_parameters.Action("straight", 0, 10),
    ... )
    >>> result.pose.position, result.collided
    ((10.0, 0.0, 10.0), False)
    """
    if action.is_stop:
        return MotionResult(pose, False)
    if margin is None:
        margin = stmr_worlds.configurations.COLLISION_MARGIN

    yaw = stmr_utilities.normalize_angle(pose.yaw + action.signed_yaw_change)
    distance = float(action.distance)
    contact: typing.Optional[float]
    match action.verb:
        case stmr_parameters.ActionVerb.LIFT | stmr_parameters.ActionVerb.DOWN:
            sign = 1 if action.verb is stmr_parameters.ActionVerb.LIFT else -1
            direction = (0.0, 0.0, float(sign))
            contact, is_reachable = _vertical_contact(scene, pose, sign)
            # The ceiling belongs to the free space.
            if contact > distance or (is_reachable and contact == distance):
                contact = None
        case _:
            sign = -1 if action.verb is stmr_parameters.ActionVerb.BACK else 1
            direction = (sign * math.cos(yaw), sign * math.sin(yaw), 0.0)
            contact = (
                _horizontal_contact(scene, pose, direction[0], direction[1], distance)
                if distance > 0
                else None
            )

    collided = contact is not None
    travelled = max(0.0, contact - margin) if collided else distance  # type: ignore
    new_pose = pose.replace(
        x=pose.x + travelled * direction[0],
        y=pose.y + travelled * direction[1],
        z=pose.z + travelled * direction[2],
        yaw=yaw,
    )
    return MotionResult(new_pose, collided)
