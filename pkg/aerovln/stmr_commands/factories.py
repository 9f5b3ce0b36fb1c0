# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Turn the text values of a run config into scenes, episodes and components."""

from __future__ import annotations

import glob
import os
import typing

import ranges

from aerovln import stmr_commands
from aerovln import stmr_converters
from aerovln import stmr_perception
from aerovln import stmr_planners
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = (
    "load_scene_source",
    "load_episode_sources",
    "build_backend",
    "build_perceptor",
)


def load_scene_source(source: str) -> stmr_worlds.Scene:
    """Load a scene document or a builtin scene like ``builtin:riverside``.

    :raises: :class:`aerovln.stmr_utilities.SceneParseError` and
        :class:`OSError`.
    """
    if source.startswith(stmr_worlds.configurations.BUILTIN_PREFIX):
        scene = stmr_worlds.load_builtin(source)
        if not isinstance(scene, stmr_worlds.Scene):
            raise stmr_utilities.RunConfigError("scene", source, "isn't a scene")
        return scene
    return stmr_converters.load_scene(source)


def load_episode_sources(
    source_sequence: typing.Sequence[str],
) -> tuple[stmr_worlds.Episode, ...]:
    """Load episodes from files, glob patterns, directories and builtin suites.

    Directories contribute every ``*.episode.txt`` file they contain.
    Files are read in sorted order.

    :raises: :class:`aerovln.stmr_utilities.EpisodeParseError` and
        :class:`OSError`.
    """
    suffix = stmr_commands.configurations.EPISODE_FILE_SUFFIX
    episode_list: list[stmr_worlds.Episode] = []
    for source in source_sequence:
        if source.startswith(stmr_worlds.configurations.BUILTIN_PREFIX):
            episode_tuple = stmr_worlds.load_builtin(source)
            if isinstance(episode_tuple, stmr_worlds.Scene):
                raise stmr_utilities.RunConfigError(
                    "episodes", source, "isn't an episode suite"
                )
            episode_list.extend(episode_tuple)
            continue
        if os.path.isdir(source):
            path_list = sorted(glob.glob(os.path.join(source, f"*{suffix}")))
        elif glob.has_magic(source):
            path_list = sorted(glob.glob(source))
        else:
            path_list = [source]
        if not path_list:
            raise FileNotFoundError(f"No episode file matches '{source}'.")
        episode_list.extend(stmr_converters.load_episode(path) for path in path_list)
    return tuple(episode_list)


def build_backend(
    name: str,
    config: stmr_commands.RunConfig,
    episodes: typing.Sequence[stmr_worlds.Episode] = tuple([]),
) -> stmr_planners.abc.LlmBackend:
    """Create the planner backend by name.

    Known names are ``echo``, ``random``, ``sampling`` (samples from
    the ground truth actions of the episodes),
    ``scripted:ground-truth``, ``scripted:<file or directory>`` and
    ``remote:<endpoint>``.

    :raises: :class:`aerovln.stmr_utilities.RunConfigError` for
        unknown names.
    """
    settings = config.episode_settings()
    degree_range: ranges.Range = settings.degree_range
    distance_range: ranges.Range = settings.distance_range
    kind, _, argument = name.partition(":")
    match kind, argument:
        case "echo", "":
            return stmr_planners.EchoBackend()
        case "random", "":
            return stmr_planners.RandomBackend(
                config.seed, degree_range, distance_range
            )
        case "sampling", "":
            return stmr_planners.ActionSamplingBackend.from_episodes(
                episodes, config.seed, degree_range, distance_range
            )
        case "scripted", "ground-truth":
            return stmr_planners.GroundTruthBackend(degree_range, distance_range)
        case "scripted", path if path:
            if not os.path.exists(path):
                raise FileNotFoundError(f"Script '{path}' doesn't exist.")
            return stmr_planners.ScriptedBackend.from_path(path)
        case "remote", endpoint if endpoint:
            return stmr_planners.RemoteBackend(
                endpoint,
                model=config.model,
                temperature=config.temperature,
                timeout=config.timeout,
                max_attempts=config.max_attempts,
            )
    raise stmr_utilities.RunConfigError("backend", name, "unknown backend")


def build_perceptor(name: str, seed: int = 0) -> stmr_perception.abc.Perceptor:
    """Create the perceptor by name: ``oracle`` or ``degraded:<rate>[:<seed>]``.

    **Example:**

    >>> from aerovln import stmr_commands
    >>> stmr_commands.build_perceptor("degraded:0.25:3")
    DegradedOraclePerceptor(drop_rate=0.25, seed=3)
    """
    kind, *argument_list = name.split(":")
    try:
        match kind, argument_list:
            case "oracle", []:
                return stmr_perception.OraclePerceptor()
            case "degraded", [rate]:
                return stmr_perception.DegradedOraclePerceptor(float(rate), seed)
            case "degraded", [rate, perceptor_seed]:
                return stmr_perception.DegradedOraclePerceptor(
                    float(rate), int(perceptor_seed)
                )
    except ValueError as error:
        raise stmr_utilities.RunConfigError("perceptor", name, str(error)) from error
    raise stmr_utilities.RunConfigError("perceptor", name, "unknown perceptor")
