# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Fly episodes and measure how well the UAV follows the instructions.

Navigation error, success rate and oracle success rate are the
metrics. :class:`NavigationAgent` runs the navigation loop of one
episode, :func:`run_suite` many episodes in parallel.
"""

from . import configurations

from .metrics import *
from .results import *
from .runners import *
from .traces import *
from .reports import *
from .suites import *

from . import metrics, results, runners, traces, reports, suites

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(metrics, results, runners, traces, reports, suites)

# Force flat structure
del stmr_utilities, metrics, results, runners, traces, reports, suites
