# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Synthetic aerial environment: scenes, rendering, motion and episodes."""

from . import configurations

from .scenes import *
from .grids import *
from .rendering import *
from .motion import *
from .episodes import *
from .fixtures import *

from . import scenes, grids, rendering, motion, episodes, fixtures

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(scenes, grids, rendering, motion, episodes, fixtures)

# Force flat structure
del stmr_utilities, scenes, grids, rendering, motion, episodes, fixtures
