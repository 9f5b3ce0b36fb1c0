# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Advance the plan when a sub-goal landmark is next to the UAV."""

from __future__ import annotations

import typing

from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_perception
from aerovln import stmr_plans

__all__ = ("StatePlanUpdater", "RegeneratingPlanUpdater", "update_plan_state")


class StatePlanUpdater(stmr_plans.abc.PlanUpdater):
    """Complete sub-goals whose landmarks appear around the matrix centre.

    :param tau: Similarity threshold of the landmark to legend join.
    :param radius: Chebyshev distance in matrix cells which counts as
        'next to the UAV'. Defaults to
        :const:`aerovln.stmr_matrices.configurations.NEIGHBOURHOOD_RADIUS`.

    Only the sub-goal in process can complete, and only statuses change.
    A sub-goal without any landmark of the legend is never observed, so
    the plan stays at it. The update is repeated until the plan doesn't
    change any more, so updating twice with the same matrix gives the
    same plan as updating once.

    **Example:**

    >>> import numpy as np
    >>> from aerovln import stmr_matrices, stmr_parameters, stmr_plans
    >>> plan = stmr_plans.decompose_instruction("fly to the road, then land")
    >>> cells = np.zeros((20, 20), dtype=int)
    >>> cells[9, 10] = 1
    >>> matrix = stmr_matrices.StmrMatrix(cells, {1: "road"}, "north0")
    >>> updated = stmr_plans.StatePlanUpdater()(
    ...     plan, matrix, stmr_parameters.UavPose(0, 0, 5)
    ... )
    >>> [s.status.value for s in updated]
    ['Completed', 'In Process']
    """

    def __init__(
        self, tau: typing.Optional[float] = None, radius: typing.Optional[int] = None
    ):
        self.tau = tau
        self.radius = radius

    def _label_set(
        self,
        subgoal: stmr_plans.SubGoal,
        matcher: stmr_perception.LegendMatcher,
    ) -> frozenset[int]:
        return frozenset(
            label
            for label in map(matcher.match, subgoal.landmarks)
            if label is not None
        )

    def _is_current_observed(
        self,
        plan: stmr_plans.PlanState,
        matcher: stmr_perception.LegendMatcher,
        nearby_label_set: frozenset[int],
    ) -> bool:
        return bool(self._label_set(plan.current, matcher) & nearby_label_set)

    def update(
        self,
        plan: stmr_plans.PlanState,
        matrix: stmr_matrices.StmrMatrix,
        pose: stmr_parameters.UavPose,
    ) -> stmr_plans.PlanState:
        matcher = stmr_perception.LegendMatcher(matrix.legend, self.tau)
        nearby_label_set = matrix.neighbourhood_labels(self.radius)
        while not plan.is_exhausted:
            if not self._is_current_observed(plan, matcher, nearby_label_set):
                break
            self._logger.debug(
                f"Completed sub-goal {plan.pointer} at {pose.position}."
            )
            plan = plan.complete_current()
        return plan


class RegeneratingPlanUpdater(stmr_plans.abc.PlanUpdater):
    """Throw the previous plan away and decompose the instruction again.

    :param instruction: The instruction of the episode.
    :param decomposer: See :func:`aerovln.stmr_plans.decompose_instruction`.
    :param landmark_extractor: See
        :func:`aerovln.stmr_plans.decompose_instruction`.
    :param tau: Similarity threshold of the landmark to legend join.
    :param radius: See :class:`StatePlanUpdater`.

    The fresh plan only knows what the current matrix shows, therefore
    progress can be lost between two steps. This is the planner without
    a persistent plan state.
    """

    def __init__(
        self,
        instruction: str,
        decomposer: typing.Optional[stmr_plans.abc.InstructionDecomposer] = None,
        landmark_extractor: typing.Optional[
            stmr_perception.abc.LandmarkExtractor
        ] = None,
        tau: typing.Optional[float] = None,
        radius: typing.Optional[int] = None,
    ):
        self.instruction = instruction
        self.decomposer = decomposer
        self.landmark_extractor = landmark_extractor
        self._state_plan_updater = StatePlanUpdater(tau, radius)

    def update(
        self,
        plan: stmr_plans.PlanState,
        matrix: stmr_matrices.StmrMatrix,
        pose: stmr_parameters.UavPose,
    ) -> stmr_plans.PlanState:
        fresh_plan = stmr_plans.decompose_instruction(
            self.instruction, self.decomposer, self.landmark_extractor
        )
        return self._state_plan_updater.update(fresh_plan, matrix, pose)


def update_plan_state(
    plan: stmr_plans.PlanState,
    matrix: stmr_matrices.StmrMatrix,
    pose: stmr_parameters.UavPose,
    tau: typing.Optional[float] = None,
) -> stmr_plans.PlanState:
    """Advance a plan with a :class:`StatePlanUpdater`."""
    return StatePlanUpdater(tau).update(plan, matrix, pose)
