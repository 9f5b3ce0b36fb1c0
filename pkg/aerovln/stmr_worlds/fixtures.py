# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Procedurally generated scene and episode suite which ship with aerovln.

Both are deterministic: the same seed always returns the same scene and
the same episodes, so they can serve as fixtures for tests and for
scripted end-to-end runs.
"""

from __future__ import annotations

import collections
import math
import typing

import numpy as np

from aerovln import stmr_parameters
from aerovln import stmr_worlds

__all__ = ("RIVERSIDE_LEGEND", "riverside_scene", "builtin_suite", "load_builtin")

ROAD, BUILDING, RIVER, TREE, GRASS, PARKING_LOT, BRIDGE = range(1, 8)

RIVERSIDE_LEGEND: dict[int, str] = {
    ROAD: "road",
    BUILDING: "building",
    RIVER: "river",
    TREE: "tree",
    GRASS: "grass",
    PARKING_LOT: "parking lot",
    BRIDGE: "bridge",
}

_SIZE = 80
_CELL_SIZE = 5.0
_START_ALTITUDE = 5.0
_CLIMB_COUNT = 2


def riverside_scene(seed: typing.Optional[int] = None) -> stmr_worlds.Scene:
    """A 400 m x 400 m riverside district centred on the world origin.

    :param seed: Seed for building and tree placement. Defaults to
        :const:`aerovln.stmr_worlds.configurations.RIVERSIDE_SEED`.

    A meandering river crosses the scene from west to east. Two
    north-south roads cross it on bridges, an east-west road runs in
    the south. Buildings stand on the free lots, a parking lot lies
    next to the southern road and a park with trees lies north of the
    river.

    **Example:**

    >>> from aerovln import stmr_worlds
    >>> scene = stmr_worlds.riverside_scene()
    >>> scene.bounds
    (-200.0, -200.0, 200.0, 200.0)
    """
    if seed is None:
        seed = stmr_worlds.configurations.RIVERSIDE_SEED
    rng = np.random.default_rng(seed)
    label = np.full((_SIZE, _SIZE), GRASS, dtype=int)
    height = np.zeros((_SIZE, _SIZE))

    for i in range(_SIZE):
        center = 48 + int(round(3 * math.sin(i / 7)))
        label[center - 2 : center + 2, i] = RIVER

    label[28:30, :] = ROAD
    for column in (slice(38, 40), slice(62, 63)):
        label[:, column] = np.where(label[:, column] == RIVER, BRIDGE, ROAD)
    height[label == BRIDGE] = 2.0

    lot = label[14:21, 44:53]
    lot[lot == GRASS] = PARKING_LOT

    for j0 in range(3, _SIZE - 4, 8):
        for i0 in range(3, _SIZE - 4, 8):
            width, depth = (int(v) for v in rng.integers(2, 4, size=2))
            building_height = float(rng.integers(8, 41))
            if rng.random() < 0.45:
                continue
            area = (slice(j0, j0 + depth), slice(i0, i0 + width))
            if np.all(label[area] == GRASS):
                label[area] = BUILDING
                height[area] = building_height

    canopy_bottom = np.zeros_like(height)
    canopy_top = np.zeros_like(height)
    canopy_label = np.zeros_like(label)
    for j in range(56, 72):
        for i in range(6, 22):
            top = float(rng.integers(8, 15))
            if label[j, i] == GRASS and rng.random() < 0.55:
                canopy_label[j, i] = TREE
                canopy_bottom[j, i] = 3.0
                canopy_top[j, i] = top

    return stmr_worlds.Scene(
        _CELL_SIZE,
        height,
        label,
        RIVERSIDE_LEGEND,
        origin=(-_SIZE * _CELL_SIZE / 2, -_SIZE * _CELL_SIZE / 2),
        canopy_bottom=canopy_bottom,
        canopy_top=canopy_top,
        canopy_label=canopy_label,
        name="riverside",
    )


def _landmark_below(
    scene: stmr_worlds.Scene, pose: stmr_parameters.UavPose
) -> typing.Optional[str]:
    """Most common non-grass category under the UAV and its neighbours."""
    ci, cj = scene.cell_index(pose.x, pose.y)
    counter: collections.Counter = collections.Counter()
    for j in range(cj - 1, cj + 2):
        for i in range(ci - 1, ci + 2):
            if scene.contains_index(i, j):
                label = scene.visible_label_at(i, j)
                if label != GRASS:
                    counter[label] += 1
    if not counter:
        return None
    label = min(counter, key=lambda label: (-counter[label], label))
    return scene.legend[label]


def _fly_leg(
    scene: stmr_worlds.Scene,
    pose: stmr_parameters.UavPose,
    turn: int,
    length: int,
) -> typing.Optional[list[stmr_parameters.UavPose]]:
    verb = "left" if turn > 0 else "right"
    action_list = [stmr_parameters.Action(verb, 15, 0)] * (abs(turn) // 15)
    action_list += [stmr_parameters.Action("straight", 0, 10)] * (length // 10)
    pose_list = []
    for action in action_list:
        pose, collided = stmr_worlds.apply_action(scene, pose, action)
        if collided:
            return None
        pose_list.append(pose)
    return pose_list


def _describe_leg(turn: int, length: int, landmark: typing.Optional[str]) -> str:
    if landmark:
        move = f"fly straight to the {landmark}"
    else:
        move = f"fly forward {length} meters"
    if turn > 0:
        return f"turn left and {move}"
    if turn < 0:
        return f"turn right and {move}"
    return move


def _random_episode(
    scene: stmr_worlds.Scene, rng: np.random.Generator, episode_id: str
) -> typing.Optional[stmr_worlds.Episode]:
    configurations = stmr_worlds.configurations
    x_min, y_min, x_max, y_max = scene.bounds
    i, j = scene.cell_index(
        rng.uniform(x_min + 60, x_max - 60), rng.uniform(y_min + 60, y_max - 60)
    )
    start = stmr_parameters.UavPose(
        scene.origin[0] + (i + 0.5) * scene.cell_size,
        scene.origin[1] + (j + 0.5) * scene.cell_size,
        _START_ALTITUDE,
        yaw=math.radians(45 * int(rng.integers(0, 8))),
    )
    if scene.pose_violation(start) is not None:
        return None

    path = [start]
    pose = start
    for _ in range(_CLIMB_COUNT):
        pose, collided = stmr_worlds.apply_action(
            scene, pose, stmr_parameters.Action("lift", 0, 10)
        )
        if collided:
            return None
        path.append(pose)

    phrase_list = ["lift off"]
    landmark = None
    for _ in range(int(rng.integers(2, 6))):
        turn = int(rng.choice([-90, -45, 0, 0, 45, 90]))
        length = 10 * int(rng.integers(2, 8))
        leg = _fly_leg(scene, pose, turn, length)
        if leg is None:
            continue
        path.extend(leg)
        pose = leg[-1]
        landmark = _landmark_below(scene, pose)
        phrase_list.append(_describe_leg(turn, length, landmark))
    if len(phrase_list) < 3:
        return None
    phrase_list.append(f"stop near the {landmark}" if landmark else "stop there")

    instruction = ", then ".join(phrase_list)
    instruction = instruction[0].upper() + instruction[1:] + "."
    episode = stmr_worlds.Episode(
        episode_id,
        instruction,
        start,
        pose.position,
        path,
        max_actions=len(path) + configurations.SUITE_ACTION_MARGIN,
        scene_name=scene.name,
    )
    minimum, maximum = configurations.SUITE_PATH_LENGTH_RANGE
    if not (
        minimum <= episode.path_length <= maximum
        and episode.start_to_goal_distance > configurations.SUITE_MIN_GOAL_DISTANCE
    ):
        return None
    return episode


def builtin_suite(
    scene: typing.Optional[stmr_worlds.Scene] = None,
    count: typing.Optional[int] = None,
    seed: typing.Optional[int] = None,
) -> tuple[stmr_worlds.Episode, ...]:
    """Generate a deterministic suite of episodes in the riverside scene.

    :param scene: The scene. Defaults to :func:`riverside_scene`.
    :param count: How many episodes. Defaults to
        :const:`aerovln.stmr_worlds.configurations.SUITE_EPISODE_COUNT`.
    :param seed: Seed of the generator. Defaults to
        :const:`aerovln.stmr_worlds.configurations.SUITE_SEED`.

    Every ground truth path climbs 20 meters and then flies between two
    and five collision-free legs of straight flight and quarter or
    eighth turns. Path lengths lie inside
    :const:`aerovln.stmr_worlds.configurations.SUITE_PATH_LENGTH_RANGE`
    and the goal is further than
    :const:`aerovln.stmr_worlds.configurations.SUITE_MIN_GOAL_DISTANCE`
    away from the start.
    """
    configurations = stmr_worlds.configurations
    if scene is None:
        scene = riverside_scene()
    if count is None:
        count = configurations.SUITE_EPISODE_COUNT
    if seed is None:
        seed = configurations.SUITE_SEED
    rng = np.random.default_rng(seed)
    episode_list: list[stmr_worlds.Episode] = []
    attempt_count = 0
    while len(episode_list) < count:
        attempt_count += 1
        if attempt_count > 500 * max(count, 1):
            raise RuntimeError(
                f"Can't generate {count} episodes in scene '{scene.name}'."
            )
        episode = _random_episode(
            scene, rng, f"{scene.name or 'scene'}-{len(episode_list):03d}"
        )
        if episode is not None:
            episode_list.append(episode)
    return tuple(episode_list)


def load_builtin(
    source: str,
) -> stmr_worlds.Scene | tuple[stmr_worlds.Episode, ...]:
    """Resolve ``builtin:riverside`` and ``builtin:suite[:N]`` sources.

    :raises: ValueError for unknown builtin names.

    **Example:**

    >>> from aerovln import stmr_worlds
    >>> len(stmr_worlds.load_builtin("builtin:suite:2"))
    2
    """
    prefix = stmr_worlds.configurations.BUILTIN_PREFIX
    name, *argument_list = source.removeprefix(prefix).split(":")
    match name, argument_list:
        case "riverside", []:
            return riverside_scene()
        case "suite", []:
            return builtin_suite()
        case "suite", [count] if count.isdigit():
            return builtin_suite(count=int(count))
        case _:
            raise ValueError(f"Unknown builtin source '{source}'.")
