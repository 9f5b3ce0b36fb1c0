# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Perceptors turn a rendered view into captioned 2D masks."""

from __future__ import annotations

import typing

import numpy as np
from scipy import ndimage

from aerovln import stmr_constants
from aerovln import stmr_parameters
from aerovln import stmr_perception
from aerovln import stmr_utilities

__all__ = (
    "SceneView",
    "OraclePerceptor",
    "DegradedOraclePerceptor",
    "ExternalPerceptor",
    "perceive",
)


class SceneView(typing.NamedTuple):
    """Everything a perceptor may look at in one step."""

    depth: np.ndarray
    semantic: np.ndarray
    pose: stmr_parameters.UavPose
    intrinsics: stmr_parameters.CameraIntrinsics
    legend: dict[int, str]
    step: int = 0
    mount: typing.Optional[np.ndarray] = None


class OraclePerceptor(stmr_perception.abc.Perceptor):
    """Perfect perception from the rendered semantic image.

    Each 4-connected region of equal label becomes one mask, captioned
    with the legend name of the label. Pixels without a hit (label
    ``0``) aren't covered by any mask. Masks are ordered by label and
    then by the position of their first pixel.

    **Example:**

    >>> import numpy as np
    >>> from aerovln import stmr_parameters, stmr_perception
    >>> semantic = np.array([[1, 1, 2], [1, 0, 2]])
    >>> view = stmr_perception.SceneView(
    ...     np.ones((2, 3)),
    ...     semantic,
    ...     stmr_parameters.UavPose(0, 0, 10),
    ...     stmr_parameters.CameraIntrinsics(1, 1, 1, 1, 3, 2),
    ...     {1: "road", 2: "building"},
    ... )
    >>> [m.caption for m in stmr_perception.OraclePerceptor()(view)]
    ['road', 'building']
    """

    def perceive(
        self, view: SceneView
    ) -> tuple[stmr_perception.PerceivedMask, ...]:
        semantic = np.asarray(view.semantic)
        mask_list = []
        for label in np.unique(semantic).tolist():
            if label == stmr_constants.UNEXPLORED:
                continue
            component_array, component_count = ndimage.label(semantic == label)
            for component in range(1, component_count + 1):
                mask_list.append(
                    stmr_perception.PerceivedMask(
                        component_array == component,
                        view.legend.get(label, str(label)),
                        label=int(label),
                    )
                )
        return tuple(mask_list)


class DegradedOraclePerceptor(stmr_perception.abc.Perceptor):
    """Oracle perception with seeded random failures.

    :param drop_rate: Probability that a mask is missing.
    :param seed: Seed of the random generator. Each step draws from a
        generator seeded with ``(seed, step)``, so the outcome depends
        neither on the order of steps nor on other episodes.
    :param corruption_rate: Probability that a kept mask gets the
        caption ``corrupted_caption`` instead of its category name.
    :param corrupted_caption: Caption of corrupted masks.
    """

    def __init__(
        self,
        drop_rate: float,
        seed: int = 0,
        corruption_rate: float = 0.0,
        corrupted_caption: str = "unknown object",
    ):
        for name, rate in (
            ("drop_rate", drop_rate),
            ("corruption_rate", corruption_rate),
        ):
            if not 0 <= rate <= 1:
                raise ValueError(f"'{name}' has to lie in [0, 1], found {rate}.")
        self.drop_rate = drop_rate
        self.seed = seed
        self.corruption_rate = corruption_rate
        self.corrupted_caption = corrupted_caption
        self._oracle = OraclePerceptor()

    def __repr_content__(self) -> str:
        return f"drop_rate={self.drop_rate}, seed={self.seed}"

    def perceive(
        self, view: SceneView
    ) -> tuple[stmr_perception.PerceivedMask, ...]:
        mask_tuple = self._oracle.perceive(view)
        rng = np.random.default_rng([self.seed, view.step])
        drop_array = rng.random(len(mask_tuple)) < self.drop_rate
        corrupt_array = rng.random(len(mask_tuple)) < self.corruption_rate
        return tuple(
            mask.replace(caption=self.corrupted_caption) if corrupt else mask
            for mask, drop, corrupt in zip(mask_tuple, drop_array, corrupt_array)
            if not drop
        )


class ExternalPerceptor(stmr_perception.abc.Perceptor):
    """Adapter for a perception service, for instance a detector plus captioner.

    :param service: Callable which receives the :class:`SceneView` and
        returns an iterable of :class:`PerceivedMask` or of
        ``(mask, caption)`` pairs.

    Any exception of the service is raised again as
    :class:`aerovln.stmr_utilities.PerceptionBackendError`.
    """

    def __init__(self, service: typing.Callable[[SceneView], typing.Iterable]):
        self.service = service

    def perceive(
        self, view: SceneView
    ) -> tuple[stmr_perception.PerceivedMask, ...]:
        try:
            response = self.service(view)
            mask_list = []
            for item in response:
                match item:
                    case stmr_perception.PerceivedMask():
                        mask_list.append(item)
                    case (mask, caption):
                        mask_list.append(stmr_perception.PerceivedMask(mask, caption))
                    case _:
                        raise stmr_utilities.CannotParseError(
                            item, stmr_perception.PerceivedMask
                        )
        except stmr_utilities.PerceptionBackendError:
            raise
        except Exception as error:
            raise stmr_utilities.PerceptionBackendError(str(error)) from error
        for mask in mask_list:
            if mask.mask.shape != view.intrinsics.shape:
                raise stmr_utilities.PerceptionBackendError(
                    f"mask shape {mask.mask.shape} doesn't match image shape "
                    f"{view.intrinsics.shape}"
                )
        return tuple(mask_list)


def perceive(
    backend: stmr_perception.abc.Perceptor, view: SceneView
) -> tuple[stmr_perception.PerceivedMask, ...]:
    """Run a perceptor on a view.

    Errors of the perceptor are propagated unchanged.
    """
    return backend.perceive(view)
