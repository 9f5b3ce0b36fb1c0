# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""What an episode leaves behind: its outcome and one trace per step."""

from __future__ import annotations

import enum
import typing

from aerovln import stmr_evaluations
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("StoppedBy", "StepTrace", "EpisodeResult")


class StoppedBy(enum.Enum):
    STOP_ACTION = "stop-action"
    MAX_ACTIONS = "max-actions"
    ERROR = "error"


class StepTrace(typing.NamedTuple):
    """Record of one step of an episode.

    All texts are frozen when the step happens: later steps don't
    change them.

    :param step: Count of actions executed before this step.
    :param pose: The pose the UAV had when it was asked.
    :param prompt: The full prompt.
    :param response_tuple: Every answer of the backend in this step.
        More than one answer means the planner was asked again.
    :param action: The executed action. ``None`` if the step ended
        without an action.
    :param matrix: The serialized matrix of the step.
    :param map: The top-down map of the step as document.
    :param note: Remarks about fallbacks, clamped values or collisions.
    """

    step: int
    pose: stmr_parameters.UavPose
    prompt: str
    response_tuple: tuple[str, ...]
    action: typing.Optional[stmr_parameters.Action]
    matrix: str
    map: str
    note: typing.Optional[str] = None


class EpisodeResult(stmr_utilities.StmrObject):
    """Outcome of one episode.

    :param episode_id: Id of the episode.
    :param goal: The goal point.
    :param trajectory: Every pose of the flight, starting with the
        start pose.
    :param stopped_by: Why the episode ended.
    :param step_traces: One trace per step.
    :param error: Message of the error which ended the episode.
    :param success_distance: Defaults to
        :const:`aerovln.stmr_evaluations.configurations.SUCCESS_DISTANCE`.

    Navigation error, success and oracle success are computed when
    the result is created.

    **Example:**

    >>> from aerovln import stmr_evaluations, stmr_parameters
    >>> result = stmr_evaluations.EpisodeResult(
    ...     "e0", (0, 0, 0), [stmr_parameters.UavPose(3, 4, 12)],
    ...     stmr_evaluations.StoppedBy.STOP_ACTION,
    ... )
    >>> result.ne, result.success, result.oracle_success
    (13.0, True, True)
    """

    def __init__(
        self,
        episode_id: str,
        goal: typing.Sequence[float],
        trajectory: typing.Sequence[stmr_parameters.UavPose],
        stopped_by: StoppedBy,
        step_traces: typing.Sequence[StepTrace] = tuple([]),
        error: typing.Optional[str] = None,
        success_distance: typing.Optional[float] = None,
    ):
        if not trajectory:
            raise ValueError("An episode result needs at least one pose.")
        self.episode_id = episode_id
        self.goal = tuple(float(c) for c in goal)
        self.trajectory = tuple(trajectory)
        self.stopped_by = stopped_by
        self.step_traces = tuple(step_traces)
        self.error = error
        self.ne = stmr_evaluations.navigation_error(self.stop_pose, self.goal)
        self.success = stmr_evaluations.success(self, success_distance)
        self.oracle_success = stmr_evaluations.oracle_success(
            self.trajectory, self.goal, success_distance
        )

    def __repr_content__(self) -> str:
        return (
            f"{self.episode_id}, {self.stopped_by.value}, ne={self.ne:.2f}, "
            f"success={self.success}"
        )

    @property
    def stop_pose(self) -> stmr_parameters.UavPose:
        return self.trajectory[-1]

    @property
    def action_count(self) -> int:
        """Count of executed actions, the final stop excluded."""
        return len(self.trajectory) - 1

    @property
    def step_count(self) -> int:
        """Count of steps, that is how often the planner was asked."""
        return len(self.step_traces)
