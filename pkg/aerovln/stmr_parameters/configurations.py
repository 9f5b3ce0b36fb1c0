# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configurations which are shared for all parameter classes.

Used by :mod:`aerovln.stmr_parameters`.
"""

import ranges

DEGREE_RANGE: ranges.Range = ranges.Range(0, 15, include_start=True, include_end=True)
"""Allowed turn angle of one action in degrees. The planner prompt
announces 0 to 15 degrees per action, multi-step turns emerge from
several actions."""

DISTANCE_RANGE: ranges.Range = ranges.Range(
    0, 10, include_start=True, include_end=True
)
"""Allowed travel distance of one action in meters."""

ACTION_VERB_ALIAS_DICT: dict[str, str] = {
    "up": "lift",
    "forward": "straight",
    "backward": "back",
}
"""Alternative verb names which are accepted wherever an action verb
is parsed. Values are canonical verb names."""

POSE_DIGIT_COUNT: int = 9
"""How many decimal digits are kept when a pose is written to a
document or a trace. Angles are written in degrees."""
