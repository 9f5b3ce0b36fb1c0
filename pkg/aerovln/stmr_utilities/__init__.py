# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Utility functions and shared base classes."""

from . import configurations

from .exceptions import *
from .tools import *
from .tests import *
from .objects import *

from . import exceptions, objects, tools

__all__ = tools.get_all(exceptions, objects, tools)

# Force flat structure
del exceptions, objects, tools
