# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Ask a language model for the next action.

The planner turns the plan ledger, the action history and the map
text into a prompt (:func:`build_prompt`), sends it to a backend
(:func:`query`) and compares the returned plan block with the ledger
(:func:`reconcile_plan_block`). Parsing of the answer lives in
:mod:`aerovln.stmr_converters`.
"""

from . import configurations
from . import abc

from .prompts import *
from .backends import *
from .reconciliations import *

from . import prompts, backends, reconciliations

from aerovln import stmr_utilities

__all__ = stmr_utilities.get_all(prompts, backends, reconciliations)

# Force flat structure
del stmr_utilities, prompts, backends, reconciliations
