# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Definition of global constants which are used all over aerovln."""

import typing

Real: typing.TypeAlias = float | int
"""Numbers accepted wherever a metric or angular value is expected."""

Point3D: typing.TypeAlias = tuple[float, float, float]
"""A point (x, y, z) in meters."""

UNEXPLORED: int = 0
"""Label id of map cells without any observation."""

TRAJECTORY: int = -1
"""Label id which marks past UAV waypoints in a serialized matrix."""

UNEXPLORED_NAME: str = "Unexplored"
TRAJECTORY_NAME: str = "your past trajectory"

# Cleanup
del typing
