# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Sub-goals with their status and the plan ledger."""

from __future__ import annotations

import enum
import typing

from aerovln import stmr_perception
from aerovln import stmr_utilities

__all__ = ("SubGoalStatus", "SubGoal", "PlanState", "current_subgoal_labels")


class SubGoalStatus(enum.Enum):
    TODO = "TODO"
    IN_PROCESS = "In Process"
    COMPLETED = "Completed"

    @classmethod
    def from_any(cls, object: typing.Any) -> SubGoalStatus:
        """Parse a status, ignoring letter case, spaces and underscores.

        **Example:**

        >>> from aerovln import stmr_plans
        >>> stmr_plans.SubGoalStatus.from_any("in_process")
        <SubGoalStatus.IN_PROCESS: 'In Process'>
        """
        match object:
            case SubGoalStatus():
                return object
            case str():
                key = "".join(object.lower().replace("_", " ").split())
                for status in cls:
                    if "".join(status.value.lower().split()) == key:
                        return status
        raise stmr_utilities.CannotParseError(object, cls)


class SubGoal(typing.NamedTuple):
    """One step of a plan.

    ``text`` never changes after decomposition, only ``status`` does.
    """

    index: int
    text: str
    landmarks: stmr_perception.LandmarkSet
    status: SubGoalStatus = SubGoalStatus.TODO


class PlanState(stmr_utilities.StmrObject):
    """Ordered sub-goals and the pointer to the current one.

    :param subgoal_sequence: The sub-goals in their order of execution.
    :raises: ValueError if the statuses don't follow the pattern
        ``Completed* (In Process)? TODO*``.

    A valid plan has exactly one sub-goal in process as long as not
    every sub-goal is completed.

    **Example:**

    >>> from aerovln import stmr_perception, stmr_plans
    >>> plan = stmr_plans.PlanState.from_text_sequence(
    ...     ["lift off", "fly to the road"],
    ...     [stmr_perception.LandmarkSet(), stmr_perception.LandmarkSet(["road"])],
    ... )
    >>> plan.pointer, plan.current.text
    (0, 'lift off')
    """

    def __init__(self, subgoal_sequence: typing.Sequence[SubGoal]):
        self.subgoal_tuple = tuple(
            subgoal._replace(index=index)
            for index, subgoal in enumerate(subgoal_sequence)
        )
        status_tuple = self.status_tuple
        Status = SubGoalStatus
        pointer = self.pointer
        expected = (
            (Status.COMPLETED,) * pointer
            + ((Status.IN_PROCESS,) if pointer < len(status_tuple) else ())
            + (Status.TODO,) * max(len(status_tuple) - pointer - 1, 0)
        )
        if status_tuple != expected:
            raise ValueError(
                "Sub-goal statuses have to follow the pattern "
                f"'Completed* In Process TODO*', found {status_tuple}."
            )

    @classmethod
    def from_text_sequence(
        cls,
        text_sequence: typing.Sequence[str],
        landmarks_sequence: typing.Sequence[stmr_perception.LandmarkSet],
    ) -> PlanState:
        """Fresh plan: the first sub-goal is in process, the others are todo."""
        return cls(
            [
                SubGoal(
                    index,
                    text,
                    landmarks,
                    SubGoalStatus.IN_PROCESS if index == 0 else SubGoalStatus.TODO,
                )
                for index, (text, landmarks) in enumerate(
                    zip(text_sequence, landmarks_sequence)
                )
            ]
        )

    def __repr_content__(self) -> str:
        return f"{len(self)} sub-goals, pointer={self.pointer}"

    def __len__(self) -> int:
        return len(self.subgoal_tuple)

    def __iter__(self) -> typing.Iterator[SubGoal]:
        return iter(self.subgoal_tuple)

    def __getitem__(self, index: int) -> SubGoal:
        return self.subgoal_tuple[index]

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, PlanState)
            and self.subgoal_tuple == other.subgoal_tuple
        )

    @property
    def status_tuple(self) -> tuple[SubGoalStatus, ...]:
        return tuple(subgoal.status for subgoal in self.subgoal_tuple)

    @property
    def text_tuple(self) -> tuple[str, ...]:
        return tuple(subgoal.text for subgoal in self.subgoal_tuple)

    @property
    def pointer(self) -> int:
        """Index of the first sub-goal which isn't completed.

        It equals the count of sub-goals once the plan is exhausted.
        """
        for subgoal in self.subgoal_tuple:
            if subgoal.status is not SubGoalStatus.COMPLETED:
                return subgoal.index
        return len(self.subgoal_tuple)

    @property
    def current(self) -> typing.Optional[SubGoal]:
        """The sub-goal in process or ``None`` if the plan is exhausted."""
        pointer = self.pointer
        return self.subgoal_tuple[pointer] if pointer < len(self) else None

    @property
    def is_exhausted(self) -> bool:
        """``True`` if every sub-goal is completed, the UAV may stop."""
        return self.pointer == len(self)

    @property
    def completed_count(self) -> int:
        return self.pointer

    def complete_until(self, index: int) -> PlanState:
        """Complete every sub-goal up to and including ``index``.

        Texts stay untouched. The next sub-goal becomes in process.
        """
        if index < self.pointer:
            return self
        subgoal_list = []
        for subgoal in self.subgoal_tuple:
            if subgoal.index <= index:
                status = SubGoalStatus.COMPLETED
            elif subgoal.index == index + 1:
                status = SubGoalStatus.IN_PROCESS
            else:
                status = SubGoalStatus.TODO
            subgoal_list.append(subgoal._replace(status=status))
        return type(self)(subgoal_list)

    def complete_current(self) -> PlanState:
        """Complete the sub-goal in process."""
        if self.is_exhausted:
            return self
        return self.complete_until(self.pointer)


def current_subgoal_labels(
    plan: PlanState, legend: dict[int, str], tau: typing.Optional[float] = None
) -> frozenset[int]:
    """Legend ids of the landmarks of the sub-goal in process.

    :param plan: The plan.
    :param legend: The scene legend.
    :param tau: Similarity threshold of the landmark to legend join.
    :return: An empty set for an exhausted plan. Landmarks without a
        counterpart in the legend are omitted with a warning.

    **Example:**

    >>> from aerovln import stmr_perception, stmr_plans
    >>> plan = stmr_plans.PlanState.from_text_sequence(
    ...     ["cross the water to the road"],
    ...     [stmr_perception.LandmarkSet(["water", "road"])],
    ... )
    >>> sorted(stmr_plans.current_subgoal_labels(plan, {3: "water", 1: "road"}))
    [1, 3]
    """
    current = plan.current
    if current is None or not len(current.landmarks):
        return frozenset()
    return frozenset(
        stmr_perception.join_landmarks_to_legend(
            current.landmarks, legend, tau
        ).values()
    )
