# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Defining the public API of planner backends."""

from __future__ import annotations

import abc
import typing

from aerovln import stmr_utilities

if typing.TYPE_CHECKING:
    from aerovln import stmr_planners
    from aerovln import stmr_worlds

__all__ = ("LlmBackend",)


class LlmBackend(stmr_utilities.StmrObject, abc.ABC):
    """Abstract base class for everything which answers planner prompts.

    Backends may be shared between episodes which run in parallel.
    Backends with per-episode state return a fresh instance from
    :meth:`for_episode`.
    """

    @abc.abstractmethod
    def complete(self, prompt: str, step: int = 0) -> str:
        """Answer a prompt.

        :param prompt: The full prompt text.
        :param step: Count of actions which the UAV already executed
            in the current episode.
        """

    def for_episode(
        self, episode: stmr_worlds.Episode, scene: stmr_worlds.Scene
    ) -> LlmBackend:
        """The backend which answers the prompts of one episode."""
        return self

    def query(self, bundle: stmr_planners.PromptBundle, step: int = 0) -> str:
        return self.complete(bundle.text, step)

    def __call__(self, prompt: str, step: int = 0) -> str:
        return self.complete(prompt, step)
