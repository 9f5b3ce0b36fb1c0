# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

MAJOR, MINOR, PATCH = 0, 3, 0

VERSION = f"{MAJOR}.{MINOR}.{PATCH}"
"""The version of the package ``aerovln.stmr``."""

del MAJOR, MINOR, PATCH
