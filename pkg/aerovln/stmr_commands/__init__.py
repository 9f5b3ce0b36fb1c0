# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Command line entry points."""

from . import configurations

from .runconfigs import *
from .factories import *
from .commands import *

from . import runconfigs, factories, commands

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(runconfigs, factories, commands)

# Force flat structure
del stmr_utilities, runconfigs, factories, commands
