# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure instruction decomposition of :mod:`aerovln.stmr_plans`."""

CLAUSE_DELIMITER_PATTERN: str = r"[,;.!?]|\bthen\b|\band\b|\bafterwards\b"
"""Regular expression which separates the clauses of an instruction.
It is matched case-insensitively."""

SUBGOAL_DECOMPOSITION_PROMPT: str = (
    "Split the following UAV navigation instruction into its consecutive "
    "steps. Answer with one step per line, in the order of execution, "
    "without numbering.\nInstruction: ${instruction}"
)
"""Prompt which asks a language model for the sub-goals of an
instruction. ``${instruction}`` is replaced by the instruction."""
