# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Local window, pooled 20x20 matrix and the place graph.

The text forms of these objects live in :mod:`aerovln.stmr_converters`.
"""

from . import configurations

from .windows import *
from .matrices import *
from .places import *

from . import windows, matrices, places

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(windows, matrices, places)

# Force flat structure
del stmr_utilities, windows, matrices, places
