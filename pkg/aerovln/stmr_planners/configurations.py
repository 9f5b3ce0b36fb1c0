# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure prompts, backends and answer handling of :mod:`aerovln.stmr_planners`."""

REQUERY_LIMIT: int = 2
"""How often the planner is asked again after an answer without a
valid action, before the UAV hovers instead."""

MAX_CONSECUTIVE_FALLBACKS: int = 3
"""After this many hover fallbacks in a row the episode ends with an
error."""

REMOTE_TIMEOUT: float = 60.0
"""Seconds to wait for one answer of a remote backend."""

REMOTE_MAX_ATTEMPTS: int = 3
"""How often a remote request is tried before the backend is
considered unavailable."""

REMOTE_BACKOFF: float = 1.0
"""Seconds to wait after the first failed attempt. Each further
attempt waits this long times the attempt count."""

REMOTE_MODEL: str = "gpt-4o"
"""Model name which is sent to remote backends."""

REMOTE_TEMPERATURE: float | None = None
"""Sampling temperature of remote requests. ``None`` keeps the default
of the service."""

API_KEY_ENVIRONMENT_VARIABLE: str = "STMR_API_KEY"
"""Environment variable with the bearer token of remote backends."""

SPATIAL_ENCODING_TO_TEMPLATE_NAME: dict[str, str] = {
    "stmr": "stmr_v1",
    "topo": "topo_v1",
    "metric": "metric_v1",
}
"""Prompt template of each spatial encoding."""

REQUIRED_PLACEHOLDER_TUPLE: tuple[str, ...] = ("instruction", "history", "map", "plan")
"""Placeholders which every prompt template has to contain."""

OPTIONAL_PLACEHOLDER_TUPLE: tuple[str, ...] = (
    "legend",
    "matrix_size",
    "center",
    "cell_metric",
    "max_degree",
    "max_distance",
)
"""Placeholders which a prompt template may contain."""

SCRIPT_DELIMITER: str = "---"
"""Line which separates two answers in a script file."""
