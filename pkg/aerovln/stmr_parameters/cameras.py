# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Pinhole camera description."""

from __future__ import annotations

import math
import typing

from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = ("CameraIntrinsics",)


class CameraIntrinsics(stmr_parameters.abc.Parameter):
    """Intrinsic parameters of an ideal pinhole camera.

    :param fx: Horizontal focal length in pixels.
    :param fy: Vertical focal length in pixels.
    :param cx: Horizontal principal point coordinate in pixels.
    :param cy: Vertical principal point coordinate in pixels.
    :param width: Image width in pixels.
    :param height: Image height in pixels.
    :raises: :class:`aerovln.stmr_utilities.InvalidIntrinsicsError` if a
        focal length isn't positive or the principal point lies outside
        of the image.

    **Example:**

    >>> from aerovln import stmr_parameters
    >>> k = stmr_parameters.CameraIntrinsics(10, 10, 2, 2, 4, 4)
    >>> k.shape
    (4, 4)
    """

    _parameter_to_compare_tuple = ("fx", "fy", "cx", "cy", "width", "height")

    def __init__(
        self,
        fx: float,
        fy: float,
        cx: float,
        cy: float,
        width: int,
        height: int,
    ):
        fx, fy, cx, cy = (float(v) for v in (fx, fy, cx, cy))
        width, height = int(width), int(height)
        if not (
            all(math.isfinite(v) for v in (fx, fy, cx, cy))
            and fx > 0
            and fy > 0
            and 0 <= cx < width
            and 0 <= cy < height
        ):
            raise stmr_utilities.InvalidIntrinsicsError(fx, fy, cx, cy, width, height)
        self.fx, self.fy, self.cx, self.cy = fx, fy, cx, cy
        self.width, self.height = width, height

    @classmethod
    def from_field_of_view(
        cls, width: int, height: int, horizontal_fov: float
    ) -> CameraIntrinsics:
        """Build square-pixel intrinsics from an horizontal field of view.

        :param width: Image width in pixels.
        :param height: Image height in pixels.
        :param horizontal_fov: Horizontal opening angle in radians.

        The principal point is placed at ``(width / 2, height / 2)`` so
        that for even image sizes one pixel lies exactly on the optical
        axis.

        **Example:**

        >>> import math
        >>> from aerovln import stmr_parameters
        >>> k = stmr_parameters.CameraIntrinsics.from_field_of_view(
        ...     32, 24, math.radians(90)
        ... )
        >>> round(k.fx, 6), k.cx, k.cy
        (16.0, 16.0, 12.0)
        """
        if not 0 < horizontal_fov < math.pi:
            raise stmr_utilities.InvalidIntrinsicsError(
                horizontal_fov, horizontal_fov, 0, 0, width, height
            )
        f = (width / 2) / math.tan(horizontal_fov / 2)
        return cls(f, f, width / 2, height / 2, width, height)

    @classmethod
    def from_any(cls, object: typing.Any) -> CameraIntrinsics:
        match object:
            case CameraIntrinsics():
                return object
            case (fx, fy, cx, cy, width, height):
                return cls(fx, fy, cx, cy, width, height)
            case {"fx": _, "fy": _, "cx": _, "cy": _, "width": _, "height": _}:
                return cls(**object)
            case _:
                raise stmr_utilities.CannotParseError(object, cls)

    @property
    def shape(self) -> tuple[int, int]:
        """Image shape as ``(height, width)`` like a numpy array."""
        return self.height, self.width

    def contains(self, u: float, v: float) -> bool:
        """Test if pixel coordinate (u, v) lies inside the image."""
        return 0 <= u < self.width and 0 <= v < self.height
