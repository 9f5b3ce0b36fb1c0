# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""The action grammar: ``verb [, degree [unit]] [, distance [unit]]``."""

from __future__ import annotations

import re
import typing

import ranges

from aerovln import stmr_converters
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("ActionToText", "TextToAction", "parse_action", "serialize_action")

_WORD_PATTERN = re.compile(r"[A-Za-z]+")
_NUMBER_PATTERN = re.compile(
    r"([-+]?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?)"
    r"\s*(?:(°|deg(?:ree)?s?\b)|(met(?:er|re)s?\b|m\b))?",
    re.IGNORECASE,
)


class ActionToText(stmr_converters.abc.Converter):
    """Write an action in the grammar of the planner.

    **Example:**

    >>> from aerovln import stmr_converters, stmr_parameters
    >>> stmr_converters.ActionToText()(stmr_parameters.Action("straight", 0, 10))
    'Action: (straight), (0 degrees), (10 meters)'
    """

    def convert(self, action_to_convert: stmr_parameters.Action) -> str:
        return stmr_converters.configurations.ACTION_FORMAT.format(
            verb=action_to_convert.verb.value,
            degree=stmr_utilities.format_number(action_to_convert.degree),
            distance=stmr_utilities.format_number(action_to_convert.distance),
        )


class TextToAction(stmr_converters.abc.Converter):
    """Parse an action leniently.

    :param degree_range: Defaults to
        :const:`aerovln.stmr_parameters.configurations.DEGREE_RANGE`.
    :param distance_range: Defaults to
        :const:`aerovln.stmr_parameters.configurations.DISTANCE_RANGE`.

    The verb is the first word which is a verb or a verb alias, in
    any letter case. Numbers with a degree unit are the turn angle,
    numbers with a meter unit the distance. Numbers without unit fill
    the free slots in grammar order: first degree, then distance.
    Missing values are ``0``. Values outside of their range are
    clamped and the action gets a note which says so.

    :raises: :class:`aerovln.stmr_utilities.ActionParseError` if the
        text doesn't contain any verb.

    **Example:**

    >>> from aerovln import stmr_converters
    >>> action = stmr_converters.TextToAction()(
    ...     "Action: (left), (30 degrees), (4 meters)"
    ... )
    >>> action.verb.value, action.degree, action.distance
    ('left', 15, 4)
    >>> action.note
    'degree 30 clamped to 15'
    """

    def __init__(
        self,
        degree_range: typing.Optional[ranges.Range] = None,
        distance_range: typing.Optional[ranges.Range] = None,
    ):
        if degree_range is None:
            degree_range = stmr_parameters.configurations.DEGREE_RANGE
        if distance_range is None:
            distance_range = stmr_parameters.configurations.DISTANCE_RANGE
        self.degree_range = degree_range
        self.distance_range = distance_range

    def _verb(self, text: str) -> stmr_parameters.ActionVerb:
        for word in _WORD_PATTERN.findall(text):
            try:
                return stmr_parameters.ActionVerb.from_any(word)
            except stmr_utilities.CannotParseError:
                continue
        raise stmr_utilities.ActionParseError(text)

    def _value_dict(self, text: str) -> dict[str, float]:
        value_dict: dict[str, float] = {}
        unitless_list = []
        for number, degree_unit, distance_unit in _NUMBER_PATTERN.findall(text):
            value = float(number)
            if value.is_integer() and abs(value) < 2**53:
                value = int(value)
            if degree_unit:
                value_dict.setdefault("degree", value)
            elif distance_unit:
                value_dict.setdefault("distance", value)
            else:
                unitless_list.append(value)
        for key in ("degree", "distance"):
            if key not in value_dict and unitless_list:
                value_dict[key] = unitless_list.pop(0)
        return value_dict

    def convert(self, text_to_convert: str) -> stmr_parameters.Action:
        verb = self._verb(text_to_convert)
        value_dict = self._value_dict(text_to_convert)
        note_list = []
        for key, range_ in (
            ("degree", self.degree_range),
            ("distance", self.distance_range),
        ):
            value = value_dict.get(key, 0)
            clamped, is_changed = stmr_utilities.clamp_to_range(value, range_)
            if is_changed:
                note_list.append(
                    f"{key} {stmr_utilities.format_number(value)} clamped to "
                    f"{stmr_utilities.format_number(clamped)}"
                )
            value_dict[key] = clamped
        note = "; ".join(note_list) or None
        if note:
            self._logger.info(f"Action '{text_to_convert.strip()}': {note}.")
        return stmr_parameters.Action(
            verb,
            value_dict["degree"],
            value_dict["distance"],
            note=note,
            degree_range=self.degree_range,
            distance_range=self.distance_range,
        )


def parse_action(
    text: str,
    degree_range: typing.Optional[ranges.Range] = None,
    distance_range: typing.Optional[ranges.Range] = None,
) -> stmr_parameters.Action:
    """Parse an action, see :class:`TextToAction`.

    **Example:**

    >>> from aerovln import stmr_converters
    >>> stmr_converters.parse_action("action: STOP").verb.value
    'stop'
    """
    return TextToAction(degree_range, distance_range)(text)


def serialize_action(action: stmr_parameters.Action) -> str:
    """Write an action, see :class:`ActionToText`."""
    return ActionToText()(action)
