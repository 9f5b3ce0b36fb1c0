# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Split instructions into sub-goals."""

from __future__ import annotations

import re
import string
import typing

from aerovln import stmr_perception
from aerovln import stmr_plans
from aerovln import stmr_utilities

__all__ = ("RuleBasedDecomposer", "LlmDecomposer", "decompose_instruction")


class RuleBasedDecomposer(stmr_plans.abc.InstructionDecomposer):
    """Split an instruction at clause delimiters and sequencing words.

    :param delimiter_pattern: Regular expression of the separators.
        Defaults to
        :const:`aerovln.stmr_plans.configurations.CLAUSE_DELIMITER_PATTERN`.

    **Example:**

    >>> from aerovln import stmr_plans
    >>> stmr_plans.RuleBasedDecomposer()(
    ...     "lift off and head straight across the water to the road"
    ... )
    ('lift off', 'head straight across the water to the road')
    """

    def __init__(self, delimiter_pattern: typing.Optional[str] = None):
        if delimiter_pattern is None:
            delimiter_pattern = stmr_plans.configurations.CLAUSE_DELIMITER_PATTERN
        self._delimiter_pattern = re.compile(delimiter_pattern, re.IGNORECASE)

    def decompose(self, instruction: str) -> tuple[str, ...]:
        return tuple(
            clause
            for clause in (
                " ".join(part.split())
                for part in self._delimiter_pattern.split(instruction)
            )
            if clause
        )


class LlmDecomposer(stmr_plans.abc.InstructionDecomposer):
    """Ask a language model for the sub-goals of an instruction.

    :param backend: Any object with a ``complete(prompt)`` method, for
        instance every :class:`aerovln.stmr_planners.LlmBackend`.
    :param prompt: Template with an ``${instruction}`` placeholder.
        Defaults to
        :const:`aerovln.stmr_plans.configurations.SUBGOAL_DECOMPOSITION_PROMPT`.
    """

    _bullet_pattern = re.compile(r"^\s*(?:[-*•]|\d+[.)]|\(\w[\w ]*\))\s*")

    def __init__(self, backend: typing.Any, prompt: typing.Optional[str] = None):
        if prompt is None:
            prompt = stmr_plans.configurations.SUBGOAL_DECOMPOSITION_PROMPT
        self.backend = backend
        self.prompt = string.Template(prompt)

    def decompose(self, instruction: str) -> tuple[str, ...]:
        try:
            raw = self.backend.complete(
                self.prompt.substitute(instruction=instruction)
            )
        except Exception as error:
            raise stmr_utilities.PlanningBackendError(str(error)) from error
        text_tuple = tuple(
            text
            for text in (
                " ".join(self._bullet_pattern.sub("", line).split()).rstrip(".")
                for line in str(raw).splitlines()
            )
            if text
        )
        if not text_tuple:
            raise stmr_utilities.PlanningBackendError(
                "response doesn't contain any sub-goal", raw_response=str(raw)
            )
        return text_tuple


def decompose_instruction(
    instruction: str,
    decomposer: typing.Optional[stmr_plans.abc.InstructionDecomposer] = None,
    landmark_extractor: typing.Optional[
        stmr_perception.abc.LandmarkExtractor
    ] = None,
) -> stmr_plans.PlanState:
    """Build a fresh plan from an instruction.

    :param instruction: The navigation instruction.
    :param decomposer: Defaults to a :class:`RuleBasedDecomposer`.
    :param landmark_extractor: Finds the landmarks of each sub-goal.
        Defaults to a
        :class:`aerovln.stmr_perception.RuleBasedLandmarkExtractor`.
    :raises: :class:`aerovln.stmr_utilities.EmptyInstructionError` for
        an empty instruction and
        :class:`aerovln.stmr_utilities.PlanningBackendError` if the
        decomposer fails.

    **Example:**

    >>> from aerovln import stmr_plans
    >>> plan = stmr_plans.decompose_instruction("take off, then fly to the river")
    >>> [(s.text, s.status.value) for s in plan]
    [('take off', 'In Process'), ('fly to the river', 'TODO')]
    """
    if not instruction or not instruction.strip():
        raise stmr_utilities.EmptyInstructionError()
    if decomposer is None:
        decomposer = RuleBasedDecomposer()
    if landmark_extractor is None:
        landmark_extractor = stmr_perception.RuleBasedLandmarkExtractor()
    try:
        text_tuple = decomposer.decompose(instruction)
    except stmr_utilities.PlanningBackendError:
        raise
    except Exception as error:
        raise stmr_utilities.PlanningBackendError(str(error)) from error
    if not text_tuple:
        text_tuple = (" ".join(instruction.split()),)
    landmarks_list = [
        stmr_perception.LandmarkSet(landmark_extractor.extract(text))
        for text in text_tuple
    ]
    return stmr_plans.PlanState.from_text_sequence(text_tuple, landmarks_list)
