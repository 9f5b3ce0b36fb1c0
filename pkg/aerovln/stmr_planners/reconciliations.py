# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Compare the plan block of an answer with the plan ledger."""

from __future__ import annotations

from aerovln import stmr_converters
from aerovln import stmr_plans
from aerovln import stmr_utilities

__all__ = ("PlanReconciler", "reconcile_plan_block")


class PlanReconciler(stmr_utilities.StmrObject):
    """Find where the planner disagrees with the plan ledger.

    The ledger always wins: the reconciler only reports and logs the
    differences, it never changes the plan. Answers without a plan
    block aren't compared.
    """

    def __init__(self):
        self._text_to_status_tuple = stmr_converters.TextToPlanStatusTuple()

    def reconcile(
        self, plan: stmr_plans.PlanState, plan_block: str
    ) -> tuple[str, ...]:
        if not plan_block.strip():
            return tuple([])
        answer_status_tuple = self._text_to_status_tuple(plan_block)
        discrepancy_list = []
        if len(answer_status_tuple) != len(plan):
            discrepancy_list.append(
                f"answer lists {len(answer_status_tuple)} sub-goals, "
                f"ledger has {len(plan)}"
            )
        for subgoal, answer_status in zip(plan, answer_status_tuple):
            if subgoal.status is not answer_status:
                discrepancy_list.append(
                    f"sub-goal {subgoal.index + 1} is '{answer_status.value}' "
                    f"in the answer but '{subgoal.status.value}' in the ledger"
                )
        for discrepancy in discrepancy_list:
            self._logger.warning(f"Plan discrepancy: {discrepancy}.")
        return tuple(discrepancy_list)


def reconcile_plan_block(
    plan: stmr_plans.PlanState, plan_block: str
) -> tuple[str, ...]:
    """Report how an answered plan block differs from the ledger.

    **Example:**

    >>> from aerovln import stmr_planners, stmr_plans
    >>> plan = stmr_plans.decompose_instruction("lift off, then fly to the road")
    >>> stmr_planners.reconcile_plan_block(
    ...     plan, "1. (In Process) Lift off.\\n2. (TODO) Fly to the road."
    ... )
    ()
    """
    return PlanReconciler().reconcile(plan, plan_block)
