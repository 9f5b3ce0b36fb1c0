# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure the matrix representation of :mod:`aerovln.stmr_matrices`."""

MATRIX_SIZE: int = 20
"""Rows and columns of the matrix. The UAV is at ``[size // 2, size // 2]``."""

CELL_METRIC: float = 5.0
"""Distance in meters between two neighbouring matrix cells."""

COMPASS_NAME_TUPLE: tuple[str, ...] = (
    "east",
    "northeast",
    "north",
    "northwest",
    "west",
    "southwest",
    "south",
    "southeast",
)
"""Names of the eight compass sectors in counter-clockwise order,
starting with the sector around yaw ``0``."""

NEIGHBOURHOOD_RADIUS: int = 1
"""Chebyshev distance in matrix cells within which a landmark counts
as reached."""
