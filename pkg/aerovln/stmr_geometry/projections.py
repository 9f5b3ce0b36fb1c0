# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Pinhole back-projection of depth pixels and camera to world transforms.

Scalar and image functions share one elementwise implementation, so
that back-projecting an image gives exactly the same floats as
back-projecting each of its pixels.
"""

from __future__ import annotations

import math
import numbers
import typing

import numpy as np
import ranges

from aerovln import stmr_constants
from aerovln import stmr_geometry
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = (
    "valid_depth_range",
    "backproject_pixel",
    "project_point",
    "camera_to_world",
    "backproject_image",
)


def valid_depth_range(max_range: typing.Optional[float] = None) -> ranges.Range:
    """Interval of depth values which count as a return.

    :param max_range: Upper border in meters. Defaults to
        :const:`aerovln.stmr_geometry.configurations.MAX_RANGE`.
    """
    if max_range is None:
        max_range = stmr_geometry.configurations.MAX_RANGE
    return ranges.Range(0, max_range, include_start=False, include_end=True)


def _pixel_to_camera(u, v, depth, k: stmr_parameters.CameraIntrinsics):
    return (u - k.cx) * depth / k.fx, (v - k.cy) * depth / k.fy, depth


def _rigid_transform(rotation: np.ndarray, translation, x, y, z):
    r = rotation
    return (
        r[0, 0] * x + r[0, 1] * y + r[0, 2] * z + translation[0],
        r[1, 0] * x + r[1, 1] * y + r[1, 2] * z + translation[1],
        r[2, 0] * x + r[2, 1] * y + r[2, 2] * z + translation[2],
    )


def backproject_pixel(
    u: float, v: float, depth: float, k: stmr_parameters.CameraIntrinsics
) -> stmr_constants.Point3D:
    """Map a pixel with known depth to a point in the camera frame.

    :param u: Horizontal pixel coordinate.
    :param v: Vertical pixel coordinate.
    :param depth: Distance along the optical axis in meters.
    :param k: The camera intrinsics.
    :raises: :class:`aerovln.stmr_utilities.InvalidDepthError` for a
        non-positive or non-finite depth and
        :class:`aerovln.stmr_utilities.PixelOutOfBoundsError` for a pixel
        outside of the image.

    **Example:**

    >>> from aerovln import stmr_geometry, stmr_parameters
    >>> k = stmr_parameters.CameraIntrinsics(10, 10, 2, 2, 4, 4)
    >>> stmr_geometry.backproject_pixel(2, 2, 7.0, k)
    (0.0, 0.0, 7.0)
    """
    if not (
        isinstance(depth, numbers.Real)
        and not isinstance(depth, bool)
        and math.isfinite(depth)
        and depth > 0
    ):
        raise stmr_utilities.InvalidDepthError(depth)
    if not k.contains(u, v):
        raise stmr_utilities.PixelOutOfBoundsError(u, v, k.width, k.height)
    x, y, z = _pixel_to_camera(u, v, float(depth), k)
    return float(x), float(y), float(z)


def project_point(
    point: typing.Sequence[float], k: stmr_parameters.CameraIntrinsics
) -> stmr_constants.Point3D:
    """Forward pinhole model: camera-frame point to ``(u, v, depth)``.

    :raises: :class:`aerovln.stmr_utilities.InvalidDepthError` if the
        point doesn't lie in front of the camera.
    """
    x, y, z = (float(c) for c in point)
    if not (math.isfinite(z) and z > 0):
        raise stmr_utilities.InvalidDepthError(z)
    return k.fx * x / z + k.cx, k.fy * y / z + k.cy, z


def camera_to_world(
    point: typing.Sequence[float],
    pose: stmr_parameters.UavPose,
    mount: typing.Optional[np.ndarray] = None,
) -> stmr_constants.Point3D:
    """Rigid transform of a camera-frame point to the world frame.

    :param point: ``(X, Y, Z)`` in the camera frame.
    :param pose: The UAV pose.
    :param mount: Rotation from camera frame to body frame. Defaults
        to :func:`aerovln.stmr_geometry.forward_camera_mount`.

    **Example:**

    >>> from aerovln import stmr_geometry, stmr_parameters
    >>> stmr_geometry.camera_to_world(
    ...     (0, 0, 0), stmr_parameters.UavPose(10, 20, 30)
    ... )
    (10.0, 20.0, 30.0)
    """
    x, y, z = (float(c) for c in point)
    if not all(math.isfinite(c) for c in (x, y, z)):
        raise stmr_utilities.NonFinitePoseError((x, y, z))
    rotation = stmr_geometry.camera_to_world_rotation(pose, mount)
    return tuple(
        float(c) for c in _rigid_transform(rotation, pose.position, x, y, z)
    )  # type: ignore


def backproject_image(
    depth: np.ndarray,
    labels: np.ndarray,
    k: stmr_parameters.CameraIntrinsics,
    pose: stmr_parameters.UavPose,
    mount: typing.Optional[np.ndarray] = None,
    max_range: typing.Optional[float] = None,
) -> stmr_geometry.SemanticPointCloud:
    """Convert a depth image and its label image to a world point cloud.

    :param depth: ``(height, width)`` array with the depth along the
        optical axis. Values ``<= 0`` or above ``max_range`` are skipped.
    :param labels: ``(height, width)`` integer array of semantic ids.
    :param k: The camera intrinsics.
    :param pose: The UAV pose.
    :param mount: Rotation from camera frame to body frame.
    :param max_range: Largest accepted depth in meters. Defaults to
        :const:`aerovln.stmr_geometry.configurations.MAX_RANGE`.
    :raises: :class:`aerovln.stmr_utilities.ImageShapeError` if the
        images don't match the intrinsics.

    Points are ordered row by row, like the pixels of the image.
    """
    depth = np.asarray(depth, dtype=float)
    labels = np.asarray(labels)
    if depth.shape != k.shape or labels.shape != k.shape:
        raise stmr_utilities.ImageShapeError(k.shape, depth.shape, labels.shape)
    if max_range is None:
        max_range = stmr_geometry.configurations.MAX_RANGE

    with np.errstate(invalid="ignore"):
        valid = np.isfinite(depth) & (depth > 0) & (depth <= max_range)
    v, u = np.nonzero(valid)
    d = depth[v, u]
    x, y, z = _pixel_to_camera(u.astype(float), v.astype(float), d, k)
    rotation = stmr_geometry.camera_to_world_rotation(pose, mount)
    world = _rigid_transform(rotation, pose.position, x, y, z)
    return stmr_geometry.SemanticPointCloud(
        np.column_stack(world) if len(d) else np.empty((0, 3)),
        labels[v, u].astype(int),
    )
