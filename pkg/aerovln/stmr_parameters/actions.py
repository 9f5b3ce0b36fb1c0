# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Discrete UAV actions."""

from __future__ import annotations

import enum
import math
import typing

import ranges

from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("ActionVerb", "Action")


class ActionVerb(enum.Enum):
    """The verbs of the action grammar."""

    RIGHT = "right"
    LEFT = "left"
    LIFT = "lift"
    DOWN = "down"
    STRAIGHT = "straight"
    BACK = "back"
    STOP = "stop"

    @classmethod
    def from_any(cls, object: typing.Any) -> ActionVerb:
        """Parse a verb, accepting aliases and any letter case.

        **Example:**

        >>> from aerovln import stmr_parameters
        >>> stmr_parameters.ActionVerb.from_any("Forward")
        <ActionVerb.STRAIGHT: 'straight'>
        """
        match object:
            case ActionVerb():
                return object
            case str():
                name = object.strip().lower()
                name = stmr_parameters.configurations.ACTION_VERB_ALIAS_DICT.get(
                    name, name
                )
                try:
                    return cls(name)
                except ValueError:
                    pass
        raise stmr_utilities.CannotParseError(object, cls)

    @property
    def is_turn(self) -> bool:
        return self in (ActionVerb.RIGHT, ActionVerb.LEFT)


class Action(stmr_parameters.abc.Parameter):
    """One step of the UAV: verb, turn angle and travel distance.

    :param verb: What the UAV does, see :class:`ActionVerb`.
    :param degree: Turn angle in degrees. Only turning verbs use it.
    :param distance: Travel distance in meters. ``stop`` ignores it.
    :param note: Free text remark, for instance about clamped
        values. The note isn't part of the action identity.
    :param degree_range: The allowed degree interval. Defaults to
        :const:`aerovln.stmr_parameters.configurations.DEGREE_RANGE`.
    :param distance_range: The allowed distance interval. Defaults to
        :const:`aerovln.stmr_parameters.configurations.DISTANCE_RANGE`.
    :raises: :class:`aerovln.stmr_utilities.InvalidActionError` if the
        degree or distance lies outside of its range.

    **Example:**

    >>> from aerovln import stmr_parameters
    >>> a = stmr_parameters.Action("straight", 0, 10)
    >>> a == stmr_parameters.Action("forward", 0, 10, note="alias")
    True
    """

    _parameter_to_compare_tuple = ("verb", "degree", "distance")

    def __init__(
        self,
        verb: ActionVerb | str,
        degree: float = 0,
        distance: float = 0,
        note: typing.Optional[str] = None,
        degree_range: typing.Optional[ranges.Range] = None,
        distance_range: typing.Optional[ranges.Range] = None,
    ):
        if degree_range is None:
            degree_range = stmr_parameters.configurations.DEGREE_RANGE
        if distance_range is None:
            distance_range = stmr_parameters.configurations.DISTANCE_RANGE
        self.verb = ActionVerb.from_any(verb)
        if not (
            _is_finite_number(degree)
            and _is_finite_number(distance)
            and degree in degree_range
            and distance in distance_range
        ):
            raise stmr_utilities.InvalidActionError(self.verb.value, degree, distance)
        self.degree = degree
        self.distance = distance
        self.note = note

    @classmethod
    def from_any(cls, object: typing.Any) -> Action:
        match object:
            case Action():
                return object
            case str() | ActionVerb():
                return cls(object)
            case (verb, degree, distance):
                return cls(verb, degree, distance)
            case _:
                raise stmr_utilities.CannotParseError(object, cls)

    @classmethod
    def hover(cls, note: typing.Optional[str] = None) -> Action:
        """The no-op action: fly straight for 0 meters."""
        return cls(ActionVerb.STRAIGHT, 0, 0, note=note)

    @property
    def is_stop(self) -> bool:
        return self.verb is ActionVerb.STOP

    @property
    def signed_yaw_change(self) -> float:
        """Yaw change of the action in radians (left turns are positive)."""
        match self.verb:
            case ActionVerb.LEFT:
                return math.radians(self.degree)
            case ActionVerb.RIGHT:
                return -math.radians(self.degree)
            case _:
                return 0.0

    def replace(self, **kwargs) -> Action:
        value_dict = dict(
            verb=self.verb, degree=self.degree, distance=self.distance, note=self.note
        )
        value_dict.update(kwargs)
        return type(self)(**value_dict)


def _is_finite_number(value: typing.Any) -> bool:
    return (
        isinstance(value, (int, float))
        and not isinstance(value, bool)
        and math.isfinite(value)
    )
