# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Convert navigation data from and to text."""

from . import abc
from . import configurations

from .documents import *
from .matrices import *
from .encodings import *
from .plans import *
from .actions import *
from .responses import *
from .maps import *

from . import documents, matrices, encodings, plans, actions, responses, maps

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(
    documents, matrices, encodings, plans, actions, responses, maps
)

# Force flat structure
del stmr_utilities, documents, matrices, encodings, plans, actions, responses, maps
