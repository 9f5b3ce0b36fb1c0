# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure the command line interface of :mod:`aerovln.stmr_commands`."""

PROGRAM_NAME: str = "aerovln-stmr"

EXIT_SUCCESS: int = 0
EXIT_DATA_ERROR: int = 1
"""Exit status for unreadable or inconsistent scene, episode or trace
files."""
EXIT_USAGE_ERROR: int = 2
"""Exit status for invalid flags or configuration values."""

DEFAULT_SCENE: str = "builtin:riverside"
DEFAULT_EPISODES: str = "builtin:suite"
DEFAULT_BACKEND: str = "echo"
DEFAULT_PERCEPTOR: str = "oracle"
DEFAULT_OUT: str = "stmr-results"
DEFAULT_SEED: int = 0

RESULTS_FILE_NAME: str = "results.csv"
SUMMARY_FILE_NAME: str = "summary.txt"

SCENE_FILE_NAME: str = "riverside.scene.txt"
"""File name of the exported fixture scene."""
EPISODE_DIRECTORY_NAME: str = "episodes"
"""Directory of the exported fixture episodes, one
``<episode id>.episode.txt`` file each."""
SCRIPT_DIRECTORY_NAME: str = "scripts"
"""Directory of the exported ground truth scripts, one
``<episode id>.txt`` file each. The directory can be replayed with
``--backend scripted:<directory>``."""
EPISODE_FILE_SUFFIX: str = ".episode.txt"

LOG_LEVEL_TUPLE: tuple[str, ...] = ("DEBUG", "INFO", "WARNING", "ERROR")
