# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Sub-goal plans whose statuses are updated, but never rewritten."""

from . import configurations
from . import abc

from .states import *
from .decomposers import *
from .updaters import *

from . import states, decomposers, updaters

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(states, decomposers, updaters)

# Force flat structure
del stmr_utilities, states, decomposers, updaters
