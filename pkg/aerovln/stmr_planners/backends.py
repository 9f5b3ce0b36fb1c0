# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Backends which answer planner prompts.

Besides the remote chat-completions backend this module contains the
deterministic backends which drive tests and baselines: replayed
scripts, ground-truth replays, a canned echo and two random agents.
"""

from __future__ import annotations

import collections
import os
import re
import time
import typing
import zlib

import numpy as np
import openai
import ranges

from aerovln import stmr_converters
from aerovln import stmr_parameters
from aerovln import stmr_planners
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = (
    "format_response",
    "ScriptedBackend",
    "GroundTruthBackend",
    "EchoBackend",
    "RemoteBackend",
    "RandomBackend",
    "ActionSamplingBackend",
    "query",
)


def format_response(
    action: stmr_parameters.Action,
    thought: str = "",
    observation: str = "",
    plan: str = "",
) -> str:
    """Write an answer in the layout the planner prompt asks for.

    **Example:**

    >>> from aerovln import stmr_parameters, stmr_planners
    >>> print(stmr_planners.format_response(stmr_parameters.Action("stop")))
    Thought:
    Observation:
    Plan:
    Action: (stop), (0 degrees), (0 meters)
    """
    return "\n".join(
        (
            f"Thought: {thought}".rstrip(),
            f"Observation: {observation}".rstrip(),
            f"Plan:\n{plan}" if plan else "Plan:",
            stmr_converters.ActionToText()(action),
        )
    )


def _episode_seed(seed: int, episode: stmr_worlds.Episode) -> list[int]:
    return [seed, zlib.crc32(episode.episode_id.encode("utf-8"))]


class ScriptedBackend(stmr_planners.abc.LlmBackend):
    """Replay pre-authored answers, one per step.

    :param response_sequence: The answers. Answer ``n`` is returned for
        step ``n``.
    :param episode_script_dict: Answers of each episode id. If given,
        :meth:`for_episode` returns a backend with the script of the
        episode.

    :raises: :class:`aerovln.stmr_utilities.ScriptExhaustedError` if a
        step has no answer.

    **Example:**

    >>> from aerovln import stmr_planners
    >>> backend = stmr_planners.ScriptedBackend(["Action: lift 5", "Action: stop"])
    >>> backend.complete("any prompt", step=1)
    'Action: stop'
    """

    def __init__(
        self,
        response_sequence: typing.Sequence[str] = tuple([]),
        episode_script_dict: typing.Optional[dict[str, tuple[str, ...]]] = None,
    ):
        self.response_tuple = tuple(response_sequence)
        self.episode_script_dict = episode_script_dict or {}

    def __repr_content__(self) -> str:
        return f"{len(self.response_tuple)} responses"

    @staticmethod
    def split_script(text: str) -> tuple[str, ...]:
        """Split the text of a script file into its answers."""
        delimiter_pattern = re.compile(
            rf"^{re.escape(stmr_planners.configurations.SCRIPT_DELIMITER)}\s*$",
            re.MULTILINE,
        )
        return tuple(
            response.strip("\n") for response in delimiter_pattern.split(text)
        )

    @classmethod
    def from_path(cls, path: str) -> ScriptedBackend:
        """Read a script file or a directory of ``<episode id>.txt`` scripts."""
        if os.path.isdir(path):
            episode_script_dict = {}
            for file_name in sorted(os.listdir(path)):
                episode_id, extension = os.path.splitext(file_name)
                if extension == ".txt":
                    with open(os.path.join(path, file_name), encoding="utf-8") as f:
                        episode_script_dict[episode_id] = cls.split_script(f.read())
            return cls(episode_script_dict=episode_script_dict)
        with open(path, encoding="utf-8") as f:
            return cls(cls.split_script(f.read()))

    def for_episode(
        self, episode: stmr_worlds.Episode, scene: stmr_worlds.Scene
    ) -> ScriptedBackend:
        if self.episode_script_dict:
            return type(self)(self.episode_script_dict.get(episode.episode_id, ()))
        return self

    def complete(self, prompt: str, step: int = 0) -> str:
        try:
            return self.response_tuple[step]
        except IndexError:
            raise stmr_utilities.ScriptExhaustedError(step, len(self.response_tuple))


class GroundTruthBackend(stmr_planners.abc.LlmBackend):
    """Answer with the actions which follow the ground truth path.

    :param degree_range: Turn range of the synthesized actions.
    :param distance_range: Distance range of the synthesized actions.

    The backend only knows a script after :meth:`for_episode`.
    """

    _thought = "Following the reference route."

    def __init__(
        self,
        degree_range: typing.Optional[ranges.Range] = None,
        distance_range: typing.Optional[ranges.Range] = None,
    ):
        self.degree_range = degree_range
        self.distance_range = distance_range

    def for_episode(
        self, episode: stmr_worlds.Episode, scene: stmr_worlds.Scene
    ) -> ScriptedBackend:
        action_tuple = stmr_worlds.ground_truth_actions(
            episode, self.degree_range, self.distance_range
        )
        return ScriptedBackend(
            tuple(
                format_response(action, thought=self._thought)
                for action in action_tuple
            )
        )

    def complete(self, prompt: str, step: int = 0) -> str:
        raise stmr_utilities.ScriptExhaustedError(step, 0)


class EchoBackend(stmr_planners.abc.LlmBackend):
    """Answer every prompt with the same valid action.

    :param action: The action of every answer. Defaults to a
        ``straight`` flight of 10 meters.

    The plan block of the prompt is echoed back into the answer.
    """

    _plan_pattern = re.compile(r"^Plan:\s*\n(.*)\Z", re.MULTILINE | re.DOTALL)

    def __init__(self, action: typing.Optional[stmr_parameters.Action] = None):
        if action is None:
            action = stmr_parameters.Action(stmr_parameters.ActionVerb.STRAIGHT, 0, 10)
        self.action = action

    def complete(self, prompt: str, step: int = 0) -> str:
        plan = ""
        if match := self._plan_pattern.search(prompt):
            plan = match.group(1).strip()
        return format_response(
            self.action,
            thought="Keep flying.",
            observation="Nothing new.",
            plan=plan,
        )


class RemoteBackend(stmr_planners.abc.LlmBackend):
    """Query a chat-completions endpoint.

    :param endpoint: Base URL of the service, for instance
        ``https://api.openai.com/v1``.
    :param model: Defaults to
        :const:`aerovln.stmr_planners.configurations.REMOTE_MODEL`.
    :param temperature: ``None`` keeps the default of the service.
    :param timeout: Seconds per request.
    :param max_attempts: How often a request is tried.
    :param backoff: Seconds to wait after the first failure. Each
        further attempt waits this long times the attempt count.
    :param api_key: The bearer token. Defaults to the value of the
        environment variable
        :const:`aerovln.stmr_planners.configurations.API_KEY_ENVIRONMENT_VARIABLE`.
    :param client: An already configured :class:`openai.OpenAI`
        client.

    Timeouts, rate limits and transport failures are retried. After
    the last attempt the backend raises
    :class:`aerovln.stmr_utilities.BackendUnavailableError`.
    """

    def __init__(
        self,
        endpoint: str,
        model: typing.Optional[str] = None,
        temperature: typing.Optional[float] = None,
        timeout: typing.Optional[float] = None,
        max_attempts: typing.Optional[int] = None,
        backoff: typing.Optional[float] = None,
        api_key: typing.Optional[str] = None,
        client: typing.Optional[openai.OpenAI] = None,
    ):
        configurations = stmr_planners.configurations
        self.endpoint = endpoint
        self.model = model or configurations.REMOTE_MODEL
        self.temperature = (
            configurations.REMOTE_TEMPERATURE if temperature is None else temperature
        )
        self.timeout = configurations.REMOTE_TIMEOUT if timeout is None else timeout
        self.max_attempts = max_attempts or configurations.REMOTE_MAX_ATTEMPTS
        self.backoff = configurations.REMOTE_BACKOFF if backoff is None else backoff
        if api_key is None:
            api_key = os.environ.get(configurations.API_KEY_ENVIRONMENT_VARIABLE, "")
        if client is None:
            client = openai.OpenAI(
                api_key=api_key,
                base_url=endpoint,
                timeout=self.timeout,
                max_retries=0,
            )
        self.client = client

    def __repr_content__(self) -> str:
        return f"{self.endpoint}, {self.model}"

    def _request(self, prompt: str) -> str:
        request_dict: dict[str, typing.Any] = dict(
            model=self.model, messages=[{"role": "user", "content": prompt}]
        )
        if self.temperature is not None:
            request_dict["temperature"] = self.temperature
        response = self.client.chat.completions.create(**request_dict)
        return response.choices[0].message.content or ""

    def complete(self, prompt: str, step: int = 0) -> str:
        last_error: typing.Optional[stmr_utilities.BackendError] = None
        for attempt in range(1, self.max_attempts + 1):
            self._logger.debug(f"Request to '{self.endpoint}':\n{prompt}")
            try:
                content = self._request(prompt)
            except openai.APITimeoutError as error:
                last_error = stmr_utilities.BackendTimeoutError(
                    str(error), attempt, self.max_attempts
                )
            except openai.RateLimitError as error:
                last_error = stmr_utilities.BackendRateLimitError(
                    str(error), attempt, self.max_attempts
                )
            except (openai.APIConnectionError, openai.APIStatusError) as error:
                last_error = stmr_utilities.BackendTransportError(
                    str(error), attempt, self.max_attempts
                )
            else:
                self._logger.debug(f"Response of '{self.endpoint}':\n{content}")
                return content
            self._logger.warning(str(last_error))
            if attempt < self.max_attempts:
                time.sleep(self.backoff * attempt)
        raise stmr_utilities.BackendUnavailableError(
            self.endpoint, self.max_attempts, last_error
        )


class RandomBackend(stmr_planners.abc.LlmBackend):
    """Baseline agent which answers uniformly random actions.

    :param seed: Seed of the random generator. Each episode gets its
        own generator which depends on the seed and the episode id.
    :param degree_range: Integer degrees are drawn from this range.
    :param distance_range: Integer distances are drawn from this range.
    """

    def __init__(
        self,
        seed: int = 0,
        degree_range: typing.Optional[ranges.Range] = None,
        distance_range: typing.Optional[ranges.Range] = None,
        random_generator: typing.Optional[np.random.Generator] = None,
    ):
        if degree_range is None:
            degree_range = stmr_parameters.configurations.DEGREE_RANGE
        if distance_range is None:
            distance_range = stmr_parameters.configurations.DISTANCE_RANGE
        self.seed = seed
        self.degree_range = degree_range
        self.distance_range = distance_range
        self._random_generator = random_generator or np.random.default_rng(seed)

    def for_episode(
        self, episode: stmr_worlds.Episode, scene: stmr_worlds.Scene
    ) -> RandomBackend:
        return type(self)(
            self.seed,
            self.degree_range,
            self.distance_range,
            np.random.default_rng(_episode_seed(self.seed, episode)),
        )

    def _integer(self, range_: ranges.Range) -> int:
        return int(
            self._random_generator.integers(
                int(np.ceil(range_.start)), int(np.floor(range_.end)), endpoint=True
            )
        )

    def complete(self, prompt: str, step: int = 0) -> str:
        verb_tuple = tuple(stmr_parameters.ActionVerb)
        verb = verb_tuple[self._random_generator.integers(len(verb_tuple))]
        degree = self._integer(self.degree_range) if verb.is_turn else 0
        distance = (
            0 if verb is stmr_parameters.ActionVerb.STOP
            else self._integer(self.distance_range)
        )
        return format_response(
            stmr_parameters.Action(
                verb,
                degree,
                distance,
                degree_range=self.degree_range,
                distance_range=self.distance_range,
            ),
            thought="Random choice.",
        )


class ActionSamplingBackend(stmr_planners.abc.LlmBackend):
    """Baseline agent which samples actions from a distribution.

    :param action_weight_dict: Relative frequency of each action,
        keyed by ``(verb, degree, distance)``.
    :param seed: Seed of the random generator. Each episode gets its
        own generator which depends on the seed and the episode id.
    :param degree_range: Turn range of the sampled actions.
    :param distance_range: Distance range of the sampled actions.

    **Example:**

    >>> from aerovln import stmr_planners
    >>> backend = stmr_planners.ActionSamplingBackend({("stop", 0, 0): 1})
    >>> print(backend.complete("any prompt").splitlines()[-1])
    Action: (stop), (0 degrees), (0 meters)
    """

    def __init__(
        self,
        action_weight_dict: dict[tuple[str, float, float], float],
        seed: int = 0,
        degree_range: typing.Optional[ranges.Range] = None,
        distance_range: typing.Optional[ranges.Range] = None,
        random_generator: typing.Optional[np.random.Generator] = None,
    ):
        if not action_weight_dict:
            raise ValueError("Can't sample from an empty action distribution.")
        self.action_weight_dict = dict(action_weight_dict)
        self.seed = seed
        self.degree_range = degree_range
        self.distance_range = distance_range
        self._key_tuple = tuple(self.action_weight_dict)
        weight_array = np.array(
            [self.action_weight_dict[key] for key in self._key_tuple], dtype=float
        )
        self._probability_array = weight_array / weight_array.sum()
        self._random_generator = random_generator or np.random.default_rng(seed)

    @classmethod
    def from_episodes(
        cls,
        episode_sequence: typing.Sequence[stmr_worlds.Episode],
        seed: int = 0,
        degree_range: typing.Optional[ranges.Range] = None,
        distance_range: typing.Optional[ranges.Range] = None,
    ) -> ActionSamplingBackend:
        """Use the action frequencies of the ground truth of some episodes."""
        counter: collections.Counter = collections.Counter(
            (action.verb.value, action.degree, action.distance)
            for episode in episode_sequence
            for action in stmr_worlds.ground_truth_actions(
                episode, degree_range, distance_range
            )
        )
        return cls(dict(sorted(counter.items())), seed, degree_range, distance_range)

    def for_episode(
        self, episode: stmr_worlds.Episode, scene: stmr_worlds.Scene
    ) -> ActionSamplingBackend:
        return type(self)(
            self.action_weight_dict,
            self.seed,
            self.degree_range,
            self.distance_range,
            np.random.default_rng(_episode_seed(self.seed, episode)),
        )

    def complete(self, prompt: str, step: int = 0) -> str:
        index = self._random_generator.choice(
            len(self._key_tuple), p=self._probability_array
        )
        verb, degree, distance = self._key_tuple[index]
        action = stmr_parameters.Action(
            verb,
            degree,
            distance,
            degree_range=self.degree_range,
            distance_range=self.distance_range,
        )
        return format_response(action, thought="Sampled action.")


def query(
    backend: stmr_planners.abc.LlmBackend,
    bundle: stmr_planners.PromptBundle,
    step: int = 0,
) -> str:
    """Ask a backend for the answer to a prompt.

    **Example:**

    >>> from aerovln import stmr_planners
    >>> backend = stmr_planners.ScriptedBackend(["a", "b", "c", "d"])
    >>> bundle = stmr_planners.PromptBundle("t", "", "", "[]", "", "", "prompt")
    >>> stmr_planners.query(backend, bundle, step=3)
    'd'
    """
    return backend.query(bundle, step)
