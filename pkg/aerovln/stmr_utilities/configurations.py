# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure the default behaviour of utility functions"""

UPDATE_GOLDEN_ENVIRONMENT_VARIABLE = "STMR_UPDATE_GOLDEN"
"""If this environment variable is set to ``1``,
:class:`aerovln.stmr_utilities.GoldenFileTestCase` (re)writes golden
files instead of comparing against them."""
