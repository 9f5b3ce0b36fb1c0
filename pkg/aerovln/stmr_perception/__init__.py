# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Landmark extraction, TF-IDF mask filtering and perceptors."""

from . import configurations
from . import abc

from .landmarks import *
from .similarity import *
from .masks import *
from .perceptors import *
from .observations import *

from . import landmarks, similarity, masks, perceptors, observations

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(
    landmarks, similarity, masks, perceptors, observations
)

# Force flat structure
del stmr_utilities, landmarks, similarity, masks, perceptors, observations
