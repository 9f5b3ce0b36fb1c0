# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Defining the public API of instruction decomposers and plan updaters."""

from __future__ import annotations

import abc
import typing

from aerovln import stmr_utilities

if typing.TYPE_CHECKING:
    from aerovln import stmr_matrices
    from aerovln import stmr_parameters
    from aerovln import stmr_plans

__all__ = ("InstructionDecomposer", "PlanUpdater")


class InstructionDecomposer(stmr_utilities.StmrObject, abc.ABC):
    """Abstract base class for all instruction decomposers.

    A decomposer splits an instruction into the texts of its sub-goals.
    """

    @abc.abstractmethod
    def decompose(self, instruction: str) -> tuple[str, ...]:
        ...

    def __call__(self, instruction: str) -> tuple[str, ...]:
        return self.decompose(instruction)


class PlanUpdater(stmr_utilities.StmrObject, abc.ABC):
    """Abstract base class for strategies which advance a plan each step."""

    @abc.abstractmethod
    def update(
        self,
        plan: stmr_plans.PlanState,
        matrix: stmr_matrices.StmrMatrix,
        pose: stmr_parameters.UavPose,
    ) -> stmr_plans.PlanState:
        ...

    def __call__(self, *args, **kwargs) -> stmr_plans.PlanState:
        return self.update(*args, **kwargs)
