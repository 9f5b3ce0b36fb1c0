# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure the text formats of :mod:`aerovln.stmr_converters`."""

SCENE_HEADER: str = "stmr-scene v1"
"""First line of every scene document."""

EPISODE_HEADER: str = "stmr-episode v1"
"""First line of every episode document."""

MAP_HEADER: str = "stmr-map v1"
"""First line of every top-down map document."""

COMMENT_PREFIX: str = "#"
"""Document lines which start with this prefix are ignored."""

SECTOR_NAME_TUPLE: tuple[str, ...] = (
    "front",
    "right front",
    "right",
    "right back",
    "back",
    "left back",
    "left",
    "left front",
)
"""Directions relative to the heading in clockwise order, each covering
45 degrees. The first sector is centred on the heading."""

ACTION_FORMAT: str = "Action: ({verb}), ({degree} degrees), ({distance} meters)"
"""How an action is written for the planner and in traces."""

PLAN_LINE_FORMAT: str = "{number}. ({status}) {text}"
"""How one sub-goal is written in the plan block."""

ASCII_UNEXPLORED: str = "."
"""Character of unexplored cells in ASCII maps."""

ASCII_TRAJECTORY: str = "*"
"""Character of visited cells in ASCII maps."""

ASCII_UAV: str = "@"
"""Character of the UAV cell in ASCII maps."""

ASCII_LABEL_CHARACTERS: str = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
"""Characters of the semantic ids 1, 2, ... in ASCII maps. Ids beyond
the string are written as ``#``."""

PGM_MAX_VALUE: int = 255
"""Largest gray value of portable graymap dumps."""
