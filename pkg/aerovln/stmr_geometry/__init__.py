# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Camera model, depth back-projection and rigid camera to world transforms."""

from . import configurations

from .rotations import *
from .projections import *
from .pointclouds import *

from . import rotations, projections, pointclouds

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(rotations, projections, pointclouds)

# Force flat structure
del stmr_utilities, rotations, projections, pointclouds
