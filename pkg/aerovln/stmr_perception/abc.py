# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Defining the public API of landmark extractors and perceptors."""

from __future__ import annotations

import abc
import typing

from aerovln import stmr_utilities

if typing.TYPE_CHECKING:
    from aerovln import stmr_perception

__all__ = ("LandmarkExtractor", "Perceptor")


class LandmarkExtractor(stmr_utilities.StmrObject, abc.ABC):
    """Abstract base class for all landmark extractors.

    A landmark extractor finds the category phrases which an instruction
    refers to. Its only public method is :meth:`extract`.
    """

    @abc.abstractmethod
    def extract(self, instruction: str) -> tuple[str, ...]:
        ...

    def __call__(self, instruction: str) -> tuple[str, ...]:
        return self.extract(instruction)


class Perceptor(stmr_utilities.StmrObject, abc.ABC):
    """Abstract base class for all perceptors.

    A perceptor turns a rendered view into 2D masks with captions.
    Implementations must be stateless, so that one perceptor can serve
    concurrently running episodes.
    """

    @abc.abstractmethod
    def perceive(
        self, view: stmr_perception.SceneView
    ) -> tuple[stmr_perception.PerceivedMask, ...]:
        ...

    def __call__(
        self, view: stmr_perception.SceneView
    ) -> tuple[stmr_perception.PerceivedMask, ...]:
        return self.perceive(view)
