# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Semantic voxel grid and its top-down projection."""

from . import configurations

from .voxels import *
from .maps import *

from . import voxels, maps

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(voxels, maps)

# Force flat structure
del stmr_utilities, voxels, maps
