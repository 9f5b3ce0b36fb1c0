# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Small value types shared by every part of the navigation stack."""

from . import configurations
from . import abc

from .cameras import *
from .poses import *
from .actions import *

from . import cameras, poses, actions

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(cameras, poses, actions)

# Force flat structure
del stmr_utilities, cameras, poses, actions
