# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Rotation matrices of the world, body and camera frames.

The world frame is right-handed with ``z`` pointing up, ``x`` east and
``y`` north. The body frame follows the UAV: ``x`` forward, ``y`` left,
``z`` up. The camera frame is the usual pinhole frame: ``Z`` along the
optical axis, ``X`` right and ``Y`` down.
"""

from __future__ import annotations

import math
import typing

import numpy as np

from aerovln import stmr_geometry
from aerovln import stmr_parameters

__all__ = (
    "rotation_x",
    "rotation_y",
    "rotation_z",
    "body_rotation",
    "forward_camera_mount",
    "downward_camera_mount",
    "camera_to_world_rotation",
)


def rotation_x(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def rotation_y(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def rotation_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def body_rotation(pose: stmr_parameters.UavPose) -> np.ndarray:
    """Rotation from the body frame to the world frame.

    Yaw turns counter-clockwise around the world ``z`` axis, a positive
    pitch lifts the nose and a positive roll lowers the right wing.

    **Example:**

    >>> import math
    >>> from aerovln import stmr_geometry, stmr_parameters
    >>> r = stmr_geometry.body_rotation(
    ...     stmr_parameters.UavPose(0, 0, 0, yaw=math.pi / 2)
    ... )
    >>> [round(float(v), 9) + 0 for v in r @ (1, 0, 0)]
    [0.0, 1.0, 0.0]
    """
    return (
        rotation_z(pose.yaw) @ rotation_y(-pose.pitch) @ rotation_x(pose.roll)
    )


_CAMERA_AXES_IN_BODY = np.array(
    [
        # X_cam  Y_cam  Z_cam
        [0.0, 0.0, 1.0],
        [-1.0, 0.0, 0.0],
        [0.0, -1.0, 0.0],
    ]
)


def forward_camera_mount(tilt: typing.Optional[float] = None) -> np.ndarray:
    """Rotation from the camera frame to the body frame.

    :param tilt: Downward tilt of the optical axis in radians. If
        ``None`` :const:`aerovln.stmr_geometry.configurations.DEFAULT_CAMERA_TILT`
        is used.

    Without tilt the optical axis is the body forward axis, image
    right is body right and image down is body down.
    """
    if tilt is None:
        tilt = stmr_geometry.configurations.DEFAULT_CAMERA_TILT
    return rotation_y(tilt) @ _CAMERA_AXES_IN_BODY


def downward_camera_mount() -> np.ndarray:
    """Camera mount which looks straight down, image top pointing forward."""
    return forward_camera_mount(math.pi / 2)


def camera_to_world_rotation(
    pose: stmr_parameters.UavPose, mount: typing.Optional[np.ndarray] = None
) -> np.ndarray:
    """Combined rotation from the camera frame to the world frame."""
    if mount is None:
        mount = forward_camera_mount()
    return body_rotation(pose) @ mount
