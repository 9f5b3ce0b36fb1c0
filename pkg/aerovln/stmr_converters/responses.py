# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Split planner answers into their labelled blocks."""

from __future__ import annotations

import re
import typing

import ranges

from aerovln import stmr_converters
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("LlmResponse", "TextToLlmResponse", "parse_response")

_LABEL_TUPLE = ("thought", "observation", "plan", "action")
_LABEL_PATTERN = re.compile(
    r"^[\s#>*_'\"`-]*(" + "|".join(_LABEL_TUPLE) + r")[\s*_'\"`]*(?::|$)(.*)$",
    re.IGNORECASE,
)
_DECORATION = " \t*_`'\""


class LlmResponse(typing.NamedTuple):
    thought: str
    observation: str
    plan_block: str
    action: stmr_parameters.Action
    raw: str


class TextToLlmResponse(stmr_converters.abc.Converter):
    """Parse the ``Thought``, ``Observation``, ``Plan`` and ``Action`` blocks.

    :param degree_range: See :class:`TextToAction`.
    :param distance_range: See :class:`TextToAction`.

    Labels are found in any letter case, in any order and with markdown
    decoration (``**Plan**:``, ``### Action``). A block reaches until
    the next label. Only the first non-empty occurrence of each label
    counts, so a heading like ``### Action`` may precede the action line.
    Missing blocks except the action are empty strings.

    :raises: :class:`aerovln.stmr_utilities.UnparseableResponseError`
        if there isn't any action block and
        :class:`aerovln.stmr_utilities.ActionParseError` if the action
        block doesn't contain a verb.

    **Example:**

    >>> from aerovln import stmr_converters
    >>> response = stmr_converters.TextToLlmResponse()(
    ...     "**Thought**: the road is ahead\\n"
    ...     "Action: (straight), (0 degrees), (10 meters)"
    ... )
    >>> response.thought, response.observation, response.action.distance
    ('the road is ahead', '', 10)
    """

    def __init__(
        self,
        degree_range: typing.Optional[ranges.Range] = None,
        distance_range: typing.Optional[ranges.Range] = None,
    ):
        self._text_to_action = stmr_converters.TextToAction(
            degree_range, distance_range
        )

    def block_dict(self, text: str) -> dict[str, str]:
        """Map each label found in the text to the content of its block."""
        line_list_dict: dict[str, list[str]] = {}
        current: typing.Optional[list[str]] = None
        for line in text.splitlines():
            if match := _LABEL_PATTERN.match(line):
                label = match.group(1).lower()
                if any(part.strip() for part in line_list_dict.get(label, [])):
                    # Repeated label after a filled block: ignore it.
                    current = None
                    continue
                current = line_list_dict[label] = []
                inline = match.group(2).strip(_DECORATION)
                if inline:
                    current.append(inline)
            elif current is not None:
                current.append(line.rstrip())
        return {
            label: "\n".join(line_list).strip()
            for label, line_list in line_list_dict.items()
        }

    def convert(self, text_to_convert: str) -> LlmResponse:
        raw = str(text_to_convert)
        block_dict = self.block_dict(raw)
        action_block = block_dict.get("action", "")
        action_line = next(
            (line for line in action_block.splitlines() if line.strip()), ""
        )
        if not action_line:
            raise stmr_utilities.UnparseableResponseError(raw)
        return LlmResponse(
            block_dict.get("thought", ""),
            block_dict.get("observation", ""),
            block_dict.get("plan", ""),
            self._text_to_action(action_line),
            raw,
        )


def parse_response(
    raw: str,
    degree_range: typing.Optional[ranges.Range] = None,
    distance_range: typing.Optional[ranges.Range] = None,
) -> LlmResponse:
    """Parse a planner answer, see :class:`TextToLlmResponse`."""
    return TextToLlmResponse(degree_range, distance_range)(raw)
