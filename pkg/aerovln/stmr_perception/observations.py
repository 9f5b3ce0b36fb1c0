# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Direction and distance of perceived landmarks relative to the UAV."""

from __future__ import annotations

import math
import typing

import numpy as np

from aerovln import stmr_geometry
from aerovln import stmr_perception
from aerovln import stmr_utilities

__all__ = ("LandmarkObservation", "observe_landmarks")


class LandmarkObservation(typing.NamedTuple):
    """A landmark seen from the UAV.

    ``bearing`` is in degrees relative to the heading, positive to the
    right (clockwise seen from above) and inside ``(-180, 180]``.
    ``distance`` is the horizontal distance in meters.
    """

    name: str
    bearing: float
    distance: float
    label: typing.Optional[int] = None


def observe_landmarks(
    masks: typing.Iterable[stmr_perception.PerceivedMask],
    view: stmr_perception.SceneView,
    max_range: typing.Optional[float] = None,
) -> tuple[LandmarkObservation, ...]:
    """Locate the centroid of each mask in the world.

    :param masks: Usually the masks which survived
        :func:`aerovln.stmr_perception.filter_masks`.
    :param view: The view the masks belong to.
    :param max_range: Pixels with a larger depth are ignored.
    :return: One observation per mask which has at least one valid
        depth pixel. The name is the matched landmark if available,
        else the caption.
    """
    observation_list = []
    pose = view.pose
    for mask in masks:
        cloud = stmr_geometry.backproject_image(
            np.where(mask.mask, view.depth, 0.0),
            np.where(mask.mask, view.semantic, 0),
            view.intrinsics,
            pose,
            view.mount,
            max_range,
        )
        if not len(cloud):
            continue
        x, y, _ = cloud.points.mean(axis=0).tolist()
        dx, dy = x - pose.x, y - pose.y
        bearing = -math.degrees(
            stmr_utilities.wrap_angle(math.atan2(dy, dx) - pose.yaw)
        )
        # Map -180 to 180, the interval is open to the left.
        if bearing <= -180:
            bearing += 360
        observation_list.append(
            LandmarkObservation(
                mask.matched_landmark or mask.caption,
                bearing,
                math.hypot(dx, dy),
                mask.label,
            )
        )
    return tuple(observation_list)
