# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Depth and semantic image rendering by exact ray casting."""

from __future__ import annotations

import math
import typing

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_geometry
from aerovln import stmr_parameters
from aerovln import stmr_worlds

__all__ = ("cast_ray", "render")


def _band_hit(z_in, dz, t_in, t_out, z_origin, bottom, top):
    """First ray parameter inside [t_in, t_out] where bottom <= z <= top."""
    if bottom <= z_in <= top:
        return t_in
    if z_in > top and dz < 0:
        t = (top - z_origin) / dz
    elif z_in < bottom and dz > 0:
        t = (bottom - z_origin) / dz
    else:
        return None
    return t if t <= t_out else None


def cast_ray(
    scene: stmr_worlds.Scene,
    origin: typing.Sequence[float],
    direction: typing.Sequence[float],
    t_max: float = math.inf,
) -> tuple[float, int]:
    """Intersect a ray with the scene surface.

    :param scene: The scene.
    :param origin: ``(x, y, z)`` start of the ray in meters.
    :param direction: ``(dx, dy, dz)`` direction of the ray, not
        necessarily normalized.
    :param t_max: Largest accepted ray parameter.
    :return: ``(t, label)`` of the first hit, or ``(0.0, 0)`` if the ray
        leaves the scene or passes ``t_max`` without hitting anything.
        The hit point is ``origin + t * direction``.
    """
    x, y, z = origin
    dx, dy, dz = direction
    for i, j, t_in, t_out in stmr_worlds.traverse_cells(scene, x, y, dx, dy, t_max):
        z_in = z + dz * t_in
        if dz >= 0 and z_in > scene.max_surface_height:
            break
        hit_t, hit_label = None, stmr_constants.UNEXPLORED
        # The terrain column reaches down to -inf.
        column_t = _band_hit(z_in, dz, t_in, t_out, z, -math.inf, scene.height[j, i])
        if column_t is not None:
            hit_t, hit_label = column_t, int(scene.label[j, i])
        if scene.canopy_label[j, i]:
            canopy_t = _band_hit(
                z_in,
                dz,
                t_in,
                t_out,
                z,
                scene.canopy_bottom[j, i],
                scene.canopy_top[j, i],
            )
            if canopy_t is not None and (hit_t is None or canopy_t < hit_t):
                hit_t, hit_label = canopy_t, int(scene.canopy_label[j, i])
        if hit_t is not None:
            if hit_t > t_max:
                break
            return float(hit_t), hit_label
    return 0.0, stmr_constants.UNEXPLORED


def render(
    scene: stmr_worlds.Scene,
    pose: stmr_parameters.UavPose,
    k: stmr_parameters.CameraIntrinsics,
    mount: typing.Optional[np.ndarray] = None,
    max_range: typing.Optional[float] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Render the depth image and the semantic image seen from a pose.

    :param scene: The scene.
    :param pose: The UAV pose.
    :param k: The camera intrinsics.
    :param mount: Rotation from camera frame to body frame. Defaults
        to :func:`aerovln.stmr_geometry.forward_camera_mount`.
    :param max_range: Hits further away than this depth are dropped.
        Defaults to :const:`aerovln.stmr_geometry.configurations.MAX_RANGE`.
    :return: ``(depth, semantic)`` arrays of shape ``(height, width)``.
        Depth is measured along the optical axis, so that
        :func:`aerovln.stmr_geometry.backproject_image` recovers the hit
        points. Pixels without a hit have depth ``0`` and label ``0``.
    :raises: :class:`aerovln.stmr_utilities.PoseOutOfBoundsError` if the
        pose lies outside of the scene or inside an obstacle.

    Each ray uses the direction ``R @ ((u - cx) / fx, (v - cy) / fy, 1)``,
    so the ray parameter of a hit equals its depth.
    """
    scene.validate_pose(pose)
    if max_range is None:
        max_range = stmr_geometry.configurations.MAX_RANGE
    rotation = stmr_geometry.camera_to_world_rotation(pose, mount)
    v, u = np.mgrid[0 : k.height, 0 : k.width].astype(float)
    camera_direction = np.stack(
        ((u - k.cx) / k.fx, (v - k.cy) / k.fy, np.ones_like(u)), axis=-1
    )
    world_direction = camera_direction @ rotation.T
    depth = np.zeros(k.shape, dtype=float)
    semantic = np.zeros(k.shape, dtype=int)
    origin = pose.position
    for row in range(k.height):
        for column in range(k.width):
            depth[row, column], semantic[row, column] = cast_ray(
                scene, origin, world_direction[row, column].tolist(), max_range
            )
    return depth, semantic
