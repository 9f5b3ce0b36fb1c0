# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure the camera model of :mod:`aerovln.stmr_geometry`."""

import math

MAX_RANGE: float = 100.0
"""Depth values above this distance (meters) are unreliable and are
treated like the 'no return' sentinel. It matches the extent of the
local map window."""

DEFAULT_CAMERA_TILT: float = 0.0
"""Downward tilt of the camera mount in radians. ``0`` looks along the
body forward axis, ``π/2`` looks straight down."""

DEFAULT_IMAGE_WIDTH: int = 32
DEFAULT_IMAGE_HEIGHT: int = 24

DEFAULT_HORIZONTAL_FOV: float = math.radians(90)
"""Horizontal opening angle of the default camera in radians."""

# Cleanup
del math
