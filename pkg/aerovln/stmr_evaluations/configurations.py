# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure metrics, episode runs and result files."""

SUCCESS_DISTANCE: float = 20.0
"""An episode succeeds if the UAV stops closer than this many meters
to the goal."""

SPATIAL_ENCODING_TUPLE: tuple[str, ...] = ("stmr", "topo", "metric")
"""How the surroundings of the UAV can be described in the prompt."""

PLAN_MODE_TUPLE: tuple[str, ...] = ("state", "regenerate")
"""``state`` keeps one plan ledger per episode, ``regenerate`` builds a
fresh plan in every step."""

DEFAULT_PARALLELISM: int = 1
"""How many episodes of a suite run at the same time."""

STEP_DIRECTORY_FORMAT: str = "step_{step}"
"""Name of the trace directory of one step."""

TRACE_FILE_NAME_DICT: dict[str, str] = {
    "prompt": "prompt.txt",
    "response": "response.txt",
    "matrix": "matrix.txt",
    "pose": "pose.txt",
    "map": "map.txt",
    "action": "action.txt",
}
"""File of each part of a step trace."""

CSV_FIELD_TUPLE: tuple[str, ...] = (
    "episode_id",
    "ne",
    "success",
    "oracle_success",
    "steps",
    "stopped_by",
)
"""Columns of the machine readable result table."""

NE_DIGIT_COUNT: int = 3
"""Decimal digits of navigation errors in result tables."""
