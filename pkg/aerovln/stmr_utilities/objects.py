# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

from __future__ import annotations

import copy
import functools
import typing

from aerovln import stmr_utilities

__all__ = ("StmrObject",)

T = typing.TypeVar("T")


class StmrObject(object):
    """Base class for aerovln objects

    This class collects functionality that's useful for any object in
    the navigation stack: a readable ``repr`` and a class based logger.
    """

    def __repr__(self) -> str:
        return f"{self.__cls_name__}({self.__repr_content__()})"

    def __repr_content__(self) -> str:
        return ""

    @functools.cached_property
    def __cls_name__(self) -> str:
        return type(self).__name__

    @functools.cached_property
    def _logger(self):
        """The class based logger."""
        return stmr_utilities.get_cls_logger(type(self))

    def copy(self: T) -> T:
        """Return a deep copy of the object."""
        return copy.deepcopy(self)
