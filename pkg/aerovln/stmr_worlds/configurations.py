# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure the synthetic environment of :mod:`aerovln.stmr_worlds`."""

COLLISION_MARGIN: float = 0.5
"""Distance in meters which a clipped motion keeps to the obstacle it
ran into."""

DEFAULT_MAX_ACTIONS: int = 60
"""Maximum count of actions of an episode if the episode doesn't
define its own limit."""

DEFAULT_CEILING: float = 200.0
"""Highest altitude in meters the UAV may reach."""

RIVERSIDE_SEED: int = 20240
"""Seed of the procedurally generated 'riverside' scene."""

SUITE_SEED: int = 7
"""Seed of the bundled episode suite."""

SUITE_EPISODE_COUNT: int = 10
"""Default count of episodes of the bundled suite."""

SUITE_PATH_LENGTH_RANGE: tuple[float, float] = (50.0, 500.0)
"""Minimal and maximal ground truth path length in meters of a suite
episode."""

SUITE_MIN_GOAL_DISTANCE: float = 60.0
"""Minimal distance in meters between the start and the goal of a
suite episode."""

SUITE_ACTION_MARGIN: int = 10
"""Additional actions which a suite episode grants on top of its
ground truth action count."""

BUILTIN_PREFIX: str = "builtin:"
"""Prefix of scene and episode sources which are generated instead of
loaded from a file."""
