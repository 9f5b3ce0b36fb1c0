# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Abstract base classes for different parameters.

This module defines the public API of parameters: value types
which describe the camera, the UAV and its actions.
"""

from __future__ import annotations

import abc
import typing

from aerovln import stmr_utilities

__all__ = ("Parameter",)

T = typing.TypeVar("T", bound="Parameter")


class Parameter(stmr_utilities.StmrObject, abc.ABC):
    """A Parameter is the base class for all aerovln parameters

    Parameters are small value objects. They are compared by the
    values of the attributes which are listed in
    :attr:`_parameter_to_compare_tuple` and they are never mutated
    after initialisation: any change returns a new object.
    """

    _parameter_to_compare_tuple: tuple[str, ...] = tuple([])

    @classmethod
    def from_any(cls: typing.Type[T], object) -> T:
        """Parse any object to Parameter.

        :param object: Object that is parsed to the parameter.
        :raises: stmr_utilities.CannotParseError in case the object
          can't be parsed to the parameter type.

        This method is useful for allowing syntactic sugar.
        """
        if not isinstance(object, cls):
            raise stmr_utilities.CannotParseError(object, cls)
        return object

    def __repr_content__(self) -> str:
        return ", ".join(
            f"{name}={getattr(self, name)!r}"
            for name in self._parameter_to_compare_tuple
        )

    def __eq__(self, other: typing.Any) -> bool:
        return type(self) is type(
            other
        ) and stmr_utilities.test_if_objects_are_equal_by_parameter_tuple(
            self, other, self._parameter_to_compare_tuple
        )

    def __hash__(self) -> int:
        return hash(
            tuple(getattr(self, name) for name in self._parameter_to_compare_tuple)
        )
