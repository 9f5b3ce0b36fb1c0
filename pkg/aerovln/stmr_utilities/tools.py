# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Generic utility functions."""

import functools
import logging
import math
import operator
import types
import typing

import ranges

from aerovln import stmr_configurations
from aerovln import stmr_constants


__all__ = (
    "uniqify_sequence",
    "clamp_to_range",
    "normalize_angle",
    "wrap_angle",
    "test_if_objects_are_equal_by_parameter_tuple",
    "get_all",
    "get_cls_logger",
    "format_number",
)


def uniqify_sequence(sequence: typing.Iterable) -> tuple:
    """Order preserving function to uniqify any iterable with hashable objects.

    :param sequence: The iterable which items shall be uniqified.
    :return: A tuple which contains each item of the input once, in the
        order of its first appearance.

    **Example:**

    >>> from aerovln import stmr_utilities
    >>> stmr_utilities.uniqify_sequence(["road", "river", "road"])
    ('road', 'river')
    """
    return tuple(dict.fromkeys(sequence))

def clamp_to_range(
    value: stmr_constants.Real, range_: ranges.Range
) -> tuple[stmr_constants.Real, bool]:
    """Clamp value into a closed range.

    :param value: The number which shall be clamped.
    :param range_: The allowed interval. Open borders are treated like
        closed ones, because a clamped value needs to be representable.
    :return: The clamped value and ``True`` if the value has been
        changed, otherwise ``False``.

    **Example:**

    >>> import ranges
    >>> from aerovln import stmr_utilities
    >>> stmr_utilities.clamp_to_range(30, ranges.Range(0, 15, include_end=True))
    (15, True)
    >>> stmr_utilities.clamp_to_range(3, ranges.Range(0, 15, include_end=True))
    (3, False)
    """
    if value in range_:
        return value, False
    if math.isnan(value):
        return range_.start, True
    if value < range_.start:
        return range_.start, True
    return range_.end, True


def normalize_angle(angle: float) -> float:
    """Map an angle in radians to [0, 2π).

    **Example:**

    >>> import math
    >>> from aerovln import stmr_utilities
    >>> stmr_utilities.normalize_angle(-math.pi / 2) == 3 * math.pi / 2
    True
    """
    tau = 2 * math.pi
    angle = math.fmod(angle, tau)
    if angle < 0:
        angle += tau
    # fmod of tiny negative numbers can produce exactly 'tau'
    if angle >= tau:
        angle = 0.0
    return float(angle)


def wrap_angle(angle: float) -> float:
    """Map an angle in radians to (-π, π]."""
    angle = normalize_angle(angle)
    if angle > math.pi:
        angle -= 2 * math.pi
    return angle


def test_if_objects_are_equal_by_parameter_tuple(
    object0: typing.Any,
    object1: typing.Any,
    parameter_to_compare_tuple: tuple[str, ...],
) -> bool:
    """Check if the parameters of two objects have equal values.

    :param object0: The first object which shall be compared.
    :param object1: The second object with which the first object shall be compared.
    :parameter_to_compare_tuple: A tuple of attribute names which shall be compared.
    :return: `True` if all values of all parameters of the objects are equal and `False`
        if not or if an `AttributeError` is raised.
    """

    for parameter_to_compare in parameter_to_compare_tuple:
        try:
            if getattr(object0, parameter_to_compare) != getattr(
                object1, parameter_to_compare
            ):
                return False
        except AttributeError:
            return False

    return True


def get_all(*submodule_tuple: types.ModuleType) -> tuple[str, ...]:
    """Fetch from all arguments their `__all__` attribute and combine them to one tuple

    :param submodule_tuple: Submodules which `__all__` attribute shall be fetched.

    This function is mostly useful in the `__init__` code of each :mod:`aerovln` module.
    """
    return functools.reduce(
        operator.add,
        map(
            lambda submodule: getattr(submodule, "__all__", tuple([])), submodule_tuple
        ),
    )


def get_cls_logger(
    cls: typing.Type, level: typing.Optional[int] = None
) -> logging.Logger:
    """Get the local logger of your class.

    :param cls: The class for which the logger should be returned. Simply call
        `type(o)` if you only have the instance.
    :type cls: typing.Type
    :param level: The logging level of the logger. If ``None`` the level
        defined in `aerovln.stmr_configurations.LOGGING_LEVEL` is used. Default
        to ``None``.
    :type level: int
    :return: A :class:`logging.Logger`.
    """
    if level is None:
        level = stmr_configurations.LOGGING_LEVEL
    logger = logging.getLogger(f"{cls.__module__}.{cls.__name__}")
    logger.setLevel(level)
    return logger


def format_number(number: stmr_constants.Real) -> str:
    """Shortest text of a number which parses back to the same value.

    Integral values are written without a decimal point.

    **Example:**

    >>> from aerovln import stmr_utilities
    >>> stmr_utilities.format_number(10.0), stmr_utilities.format_number(2.5)
    ('10', '2.5')
    """
    number = float(number)
    if number.is_integer():
        return str(int(number))
    return repr(number)
