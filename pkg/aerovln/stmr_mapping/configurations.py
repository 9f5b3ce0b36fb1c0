# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure the semantic memory of :mod:`aerovln.stmr_mapping`."""

VOXEL_SIZE: float = 5.0
"""Side length of a voxel and of a top-down map cell in meters. It
equals the default matrix cell metric, so that one voxel column
becomes one matrix cell."""
