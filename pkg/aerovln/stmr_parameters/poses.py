# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Position and attitude of the UAV."""

from __future__ import annotations

import math
import typing

from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("UavPose",)


class UavPose(stmr_parameters.abc.Parameter):
    """Position and attitude of the UAV in the world frame.

    :param x: East coordinate in meters.
    :param y: North coordinate in meters.
    :param z: Altitude in meters.
    :param pitch: Nose-up rotation in radians.
    :param roll: Right-wing-down rotation in radians.
    :param yaw: Heading in radians. ``0`` faces east (+x) and the
        angle increases counter-clockwise. It is normalized to
        [0, 2π).
    :raises: :class:`aerovln.stmr_utilities.NonFinitePoseError` if any
        value isn't finite.

    **Example:**

    >>> import math
    >>> from aerovln import stmr_parameters
    >>> p = stmr_parameters.UavPose(0, 0, 10, yaw=-math.pi / 2)
    >>> round(math.degrees(p.yaw))
    270
    """

    _parameter_to_compare_tuple = ("x", "y", "z", "pitch", "roll", "yaw")

    def __init__(
        self,
        x: float,
        y: float,
        z: float,
        pitch: float = 0.0,
        roll: float = 0.0,
        yaw: float = 0.0,
    ):
        value_tuple = tuple(float(v) for v in (x, y, z, pitch, roll, yaw))
        if not all(math.isfinite(v) for v in value_tuple):
            raise stmr_utilities.NonFinitePoseError(value_tuple)
        self.x, self.y, self.z, self.pitch, self.roll, _ = value_tuple
        self.yaw = stmr_utilities.normalize_angle(value_tuple[-1])

    @classmethod
    def from_any(cls, object: typing.Any) -> UavPose:
        match object:
            case UavPose():
                return object
            case (x, y, z):
                return cls(x, y, z)
            case (x, y, z, pitch, roll, yaw):
                return cls(x, y, z, pitch, roll, yaw)
            case {"x": _, "y": _, "z": _}:
                return cls(**object)
            case _:
                raise stmr_utilities.CannotParseError(object, cls)

    @property
    def position(self) -> tuple[float, float, float]:
        return self.x, self.y, self.z

    @property
    def value_tuple(self) -> tuple[float, ...]:
        """The P vector ``(x, y, z, pitch, roll, yaw)``."""
        return self.x, self.y, self.z, self.pitch, self.roll, self.yaw

    def replace(self, **kwargs) -> UavPose:
        """Return a new pose where the given attributes are changed.

        **Example:**

        >>> from aerovln import stmr_parameters
        >>> stmr_parameters.UavPose(1, 2, 3).replace(z=10).position
        (1.0, 2.0, 10.0)
        """
        value_dict = dict(zip(self._parameter_to_compare_tuple, self.value_tuple))
        value_dict.update(kwargs)
        return type(self)(**value_dict)

    def distance_to(self, point: typing.Sequence[float]) -> float:
        """3D Euclidean distance between the pose position and a point."""
        return math.dist(self.position, tuple(point))
