# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Run many episodes side by side."""

from __future__ import annotations

import concurrent.futures
import pathlib
import sys
import typing

import tqdm

from aerovln import stmr_evaluations
from aerovln import stmr_worlds

__all__ = ("run_suite",)


def run_suite(
    scene: stmr_worlds.Scene,
    episodes: typing.Sequence[stmr_worlds.Episode],
    agent: stmr_evaluations.NavigationAgent,
    parallelism: typing.Optional[int] = None,
    trace_directory: typing.Optional[str | pathlib.Path] = None,
    show_progress: bool = False,
) -> tuple[stmr_evaluations.EpisodeResult, ...]:
    """Fly every episode with one agent.

    :param scene: The scene of all episodes.
    :param episodes: The episodes.
    :param agent: The agent. It keeps the state of each episode
        separate, therefore it can fly several episodes at once.
    :param parallelism: How many episodes run at the same time.
        Defaults to
        :const:`aerovln.stmr_evaluations.configurations.DEFAULT_PARALLELISM`.
    :param trace_directory: If given, the step traces of each episode
        are written below this directory as soon as the episode ends.
    :param show_progress: Draw a progress bar on standard error.
    :return: The results in the order of the episodes, independent of
        the order in which the episodes finished.
    """
    if parallelism is None:
        parallelism = stmr_evaluations.configurations.DEFAULT_PARALLELISM
    if parallelism < 1:
        raise ValueError(f"Parallelism has to be >= 1, found {parallelism}.")

    def fly(episode: stmr_worlds.Episode) -> stmr_evaluations.EpisodeResult:
        result = agent.run(scene, episode)
        if trace_directory is not None:
            stmr_evaluations.write_trace(result, trace_directory)
        return result

    result_list: list[typing.Optional[stmr_evaluations.EpisodeResult]] = [
        None
    ] * len(episodes)
    with tqdm.tqdm(
        total=len(episodes),
        desc="episodes",
        unit="episode",
        file=sys.stderr,
        disable=not show_progress,
    ) as progress_bar:
        with concurrent.futures.ThreadPoolExecutor(
            max_workers=parallelism
        ) as executor:
            future_to_index = {
                executor.submit(fly, episode): index
                for index, episode in enumerate(episodes)
            }
            for future in concurrent.futures.as_completed(future_to_index):
                result_list[future_to_index[future]] = future.result()
                progress_bar.update(1)
    return tuple(result_list)  # type: ignore
