# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Persist step traces as one directory per step and read them back."""

from __future__ import annotations

import os
import pathlib
import re
import typing

from aerovln import stmr_converters
from aerovln import stmr_evaluations
from aerovln import stmr_mapping
from aerovln import stmr_parameters
from aerovln import stmr_planners
from aerovln import stmr_utilities

__all__ = ("write_trace", "TraceStep", "trace_step_count", "load_trace_step")

_NO_ACTION = "none"


def _write(path: pathlib.Path, text: str):
    path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def write_trace(
    result: stmr_evaluations.EpisodeResult, directory: str | pathlib.Path
) -> pathlib.Path:
    """Write the step traces of an episode below ``directory/<episode id>``.

    :return: The directory of the episode.

    Every step gets its own directory with the prompt, the answers,
    the serialized matrix, the pose, the top-down map and the executed
    action. Several answers of one step are separated by script
    delimiter lines, so a response file can be replayed by a
    :class:`aerovln.stmr_planners.ScriptedBackend`.
    """
    configurations = stmr_evaluations.configurations
    name_dict = configurations.TRACE_FILE_NAME_DICT
    delimiter = f"\n{stmr_planners.configurations.SCRIPT_DELIMITER}\n"
    episode_directory = pathlib.Path(directory, result.episode_id)
    pose_to_text = stmr_converters.PoseToText()
    action_to_text = stmr_converters.ActionToText()
    for trace in result.step_traces:
        step_name = configurations.STEP_DIRECTORY_FORMAT.format(step=trace.step)
        step_directory = episode_directory / step_name
        step_directory.mkdir(parents=True, exist_ok=True)
        action_text = (
            _NO_ACTION if trace.action is None else action_to_text(trace.action)
        )
        if trace.note:
            action_text += f"\nNote: {trace.note}"
        for key, text in (
            ("prompt", trace.prompt),
            ("response", delimiter.join(trace.response_tuple)),
            ("matrix", trace.matrix),
            ("pose", pose_to_text(trace.pose)),
            ("map", trace.map),
            ("action", action_text),
        ):
            _write(step_directory / name_dict[key], text)
    return episode_directory


class TraceStep(typing.NamedTuple):
    """What a persisted step trace contains for map inspection."""

    step: int
    pose: stmr_parameters.UavPose
    matrix: str
    map: stmr_mapping.TopDownMap


def trace_step_count(episode_directory: str | pathlib.Path) -> int:
    """How many step directories an episode trace has."""
    pattern = re.compile(
        re.escape(stmr_evaluations.configurations.STEP_DIRECTORY_FORMAT).replace(
            re.escape("{step}"), r"(\d+)"
        )
        + "$"
    )
    if not os.path.isdir(episode_directory):
        return 0
    return sum(
        1
        for name in os.listdir(episode_directory)
        if pattern.match(name)
        and os.path.isdir(os.path.join(episode_directory, name))
    )


def load_trace_step(
    episode_directory: str | pathlib.Path, step: int
) -> TraceStep:
    """Read pose, matrix and map of one persisted step.

    :raises: :class:`aerovln.stmr_utilities.TraceError` if the trace
        doesn't have this step.
    """
    configurations = stmr_evaluations.configurations
    name_dict = configurations.TRACE_FILE_NAME_DICT
    step_directory = pathlib.Path(
        episode_directory, configurations.STEP_DIRECTORY_FORMAT.format(step=step)
    )
    if step < 0 or not step_directory.is_dir():
        raise stmr_utilities.TraceError(
            f"Trace '{episode_directory}' has no step {step} "
            f"(it has {trace_step_count(episode_directory)} steps)."
        )

    def read(key: str) -> str:
        return (step_directory / name_dict[key]).read_text(encoding="utf-8")

    return TraceStep(
        step,
        stmr_converters.TextToPose()(read("pose")),
        read("matrix").rstrip("\n"),
        stmr_converters.TextToTopDownMap()(read("map")),
    )
