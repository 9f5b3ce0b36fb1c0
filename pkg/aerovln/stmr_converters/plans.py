# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""The numbered plan block of the prompt and of planner answers."""

from __future__ import annotations

import re

from aerovln import stmr_converters
from aerovln import stmr_plans
from aerovln import stmr_utilities

__all__ = ("PlanStateToText", "TextToPlanStatusTuple")

_PLAN_LINE_PATTERN = re.compile(r"^\s*[-*]*\s*(\d+)\s*[.):]\s*\(([^)]*)\)\s*(.*)$")


class PlanStateToText(stmr_converters.abc.Converter):
    """Write one numbered line per sub-goal with its status in brackets.

    **Example:**

    >>> from aerovln import stmr_converters, stmr_plans
    >>> plan = stmr_plans.decompose_instruction("lift off, then fly to the road")
    >>> print(stmr_converters.PlanStateToText()(plan))
    1. (In Process) Lift off.
    2. (TODO) Fly to the road.
    """

    def convert(self, plan_state_to_convert: stmr_plans.PlanState) -> str:
        line_format = stmr_converters.configurations.PLAN_LINE_FORMAT
        line_list = []
        for subgoal in plan_state_to_convert:
            text = subgoal.text[:1].upper() + subgoal.text[1:]
            if not text.endswith((".", "!", "?")):
                text += "."
            line_list.append(
                line_format.format(
                    number=subgoal.index + 1, status=subgoal.status.value, text=text
                )
            )
        return "\n".join(line_list)


class TextToPlanStatusTuple(stmr_converters.abc.Converter):
    """Read the statuses of a plan block.

    Lines which don't look like numbered plan lines or whose status
    is unknown are skipped. Statuses are returned in the order of
    their numbers.

    **Example:**

    >>> from aerovln import stmr_converters
    >>> stmr_converters.TextToPlanStatusTuple()(
    ...     "1. (Completed) Lift off.\\n2. (in process) Fly to the road."
    ... )
    (<SubGoalStatus.COMPLETED: 'Completed'>, <SubGoalStatus.IN_PROCESS: 'In Process'>)
    """

    def convert(self, text_to_convert: str) -> tuple[stmr_plans.SubGoalStatus, ...]:
        number_to_status = {}
        for line in text_to_convert.splitlines():
            if not (match := _PLAN_LINE_PATTERN.match(line)):
                continue
            number, status, _ = match.groups()
            try:
                number_to_status[int(number)] = stmr_plans.SubGoalStatus.from_any(
                    status
                )
            except stmr_utilities.CannotParseError:
                self._logger.debug(f"Skipped plan line with status '{status}'.")
        return tuple(status for _, status in sorted(number_to_status.items()))
