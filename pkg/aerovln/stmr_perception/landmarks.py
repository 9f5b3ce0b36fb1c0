# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Extract landmark categories from navigation instructions."""

from __future__ import annotations

import re
import string
import typing

from aerovln import stmr_perception
from aerovln import stmr_utilities

__all__ = (
    "LandmarkSet",
    "RuleBasedLandmarkExtractor",
    "LlmLandmarkExtractor",
    "extract_landmarks",
)


def _normalize_phrase(phrase: str) -> str:
    return " ".join(str(phrase).lower().split())


class LandmarkSet(stmr_utilities.StmrObject):
    """Ordered, lowercased and deduplicated landmark phrases.

    :param landmarks: The phrases. Empty phrases are ignored.

    **Example:**

    >>> from aerovln import stmr_perception
    >>> stmr_perception.LandmarkSet(["Road", "river", "road"])
    LandmarkSet(road, river)
    """

    def __init__(self, landmarks: typing.Iterable[str] = tuple([])):
        self.landmark_tuple: tuple[str, ...] = stmr_utilities.uniqify_sequence(
            phrase for phrase in map(_normalize_phrase, landmarks) if phrase
        )

    def __repr_content__(self) -> str:
        return ", ".join(self.landmark_tuple)

    def __iter__(self) -> typing.Iterator[str]:
        return iter(self.landmark_tuple)

    def __len__(self) -> int:
        return len(self.landmark_tuple)

    def __getitem__(self, index: int) -> str:
        return self.landmark_tuple[index]

    def __contains__(self, phrase: typing.Any) -> bool:
        return (
            isinstance(phrase, str)
            and _normalize_phrase(phrase) in self.landmark_tuple
        )

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, LandmarkSet)
            and self.landmark_tuple == other.landmark_tuple
        )

    def __hash__(self) -> int:
        return hash(self.landmark_tuple)

    def subset(self, phrase_collection: typing.Iterable[str]) -> LandmarkSet:
        """Landmarks of this set which also appear in the collection."""
        phrase_set = set(map(_normalize_phrase, phrase_collection))
        return LandmarkSet(p for p in self.landmark_tuple if p in phrase_set)


class RuleBasedLandmarkExtractor(stmr_perception.abc.LandmarkExtractor):
    """Find lexicon phrases in an instruction.

    :param lexicon: Known category phrases. Defaults to
        :const:`aerovln.stmr_perception.configurations.LANDMARK_LEXICON`.
    :param modifier_lexicon: Adjectives which stay attached to a
        following landmark. Defaults to
        :const:`aerovln.stmr_perception.configurations.MODIFIER_LEXICON`.
    :param vocabulary: Additional phrases, usually the category names
        of the scene legend.

    The instruction is split into lowercase tokens. At each position
    the longest known phrase wins, plural forms of known words are
    reduced to their singular. Modifiers directly in front of a phrase
    become part of it.

    **Example:**

    >>> from aerovln import stmr_perception
    >>> extractor = stmr_perception.RuleBasedLandmarkExtractor()
    >>> extractor("turn left after the white building near the river")
    ('white building', 'river')
    """

    def __init__(
        self,
        lexicon: typing.Optional[typing.Iterable[str]] = None,
        modifier_lexicon: typing.Optional[typing.Iterable[str]] = None,
        vocabulary: typing.Iterable[str] = tuple([]),
    ):
        configurations = stmr_perception.configurations
        if lexicon is None:
            lexicon = configurations.LANDMARK_LEXICON
        if modifier_lexicon is None:
            modifier_lexicon = configurations.MODIFIER_LEXICON
        self._token_pattern = re.compile(configurations.TOKEN_PATTERN)
        phrase_set = {
            tuple(self._token_pattern.findall(_normalize_phrase(phrase)))
            for phrase in (*lexicon, *vocabulary)
        }
        phrase_set.discard(tuple([]))
        self._phrase_set = frozenset(phrase_set)
        self._max_phrase_length = max(map(len, self._phrase_set), default=0)
        self._known_token_set = frozenset(t for p in self._phrase_set for t in p)
        self._modifier_set = frozenset(map(_normalize_phrase, modifier_lexicon))

    def _singular(self, token: str) -> str:
        if token in self._known_token_set:
            return token
        for suffix, replacement in (("ies", "y"), ("es", ""), ("s", "")):
            if token.endswith(suffix):
                candidate = token[: -len(suffix)] + replacement
                if candidate in self._known_token_set:
                    return candidate
        return token

    def extract(self, instruction: str) -> tuple[str, ...]:
        token_list = [
            self._singular(token)
            for token in self._token_pattern.findall(instruction.lower())
        ]
        phrase_list = []
        index = 0
        while index < len(token_list):
            for length in range(self._max_phrase_length, 0, -1):
                if tuple(token_list[index : index + length]) in self._phrase_set:
                    break
            else:
                index += 1
                continue
            start = index
            while start > 0 and token_list[start - 1] in self._modifier_set:
                start -= 1
            phrase_list.append(" ".join(token_list[start : index + length]))
            index += length
        return stmr_utilities.uniqify_sequence(phrase_list)


class LlmLandmarkExtractor(stmr_perception.abc.LandmarkExtractor):
    """Ask a language model for the landmarks of an instruction.

    :param backend: Any object with a ``complete(prompt)`` method which
        returns the model text, for instance every
        :class:`aerovln.stmr_planners.LlmBackend`.
    :param prompt: Template with an ``${instruction}`` placeholder.
        Defaults to
        :const:`aerovln.stmr_perception.configurations.LANDMARK_EXTRACTION_PROMPT`.

    The answer is read as one phrase per line (or comma separated).
    Bullets and numbering are ignored.
    """

    _bullet_pattern = re.compile(r"^\s*(?:[-*•]|\d+[.)])\s*")

    def __init__(self, backend: typing.Any, prompt: typing.Optional[str] = None):
        if prompt is None:
            prompt = stmr_perception.configurations.LANDMARK_EXTRACTION_PROMPT
        self.backend = backend
        self.prompt = string.Template(prompt)

    def extract(self, instruction: str) -> tuple[str, ...]:
        prompt = self.prompt.substitute(instruction=instruction)
        try:
            raw = self.backend.complete(prompt)
        except Exception as error:
            raise stmr_utilities.PerceptionBackendError(str(error)) from error
        phrase_list = []
        for line in str(raw).splitlines():
            line = self._bullet_pattern.sub("", line)
            phrase_list.extend(
                phrase.strip(" .\"'`") for phrase in line.split(",")
            )
        landmark_tuple = LandmarkSet(phrase_list).landmark_tuple
        if not landmark_tuple:
            raise stmr_utilities.PerceptionBackendError(
                "response doesn't name any landmark", raw_response=str(raw)
            )
        return landmark_tuple


def extract_landmarks(
    instruction: str,
    extractor: typing.Optional[stmr_perception.abc.LandmarkExtractor] = None,
) -> LandmarkSet:
    """Extract the landmark categories of an instruction.

    :param instruction: The navigation instruction.
    :param extractor: The extractor backend. Defaults to a
        :class:`RuleBasedLandmarkExtractor`.
    :raises: :class:`aerovln.stmr_utilities.EmptyInstructionError` for
        an empty instruction and
        :class:`aerovln.stmr_utilities.PerceptionBackendError` if the
        extractor fails.

    **Example:**

    >>> from aerovln import stmr_perception
    >>> stmr_perception.extract_landmarks(
    ...     "head straight across the water to the road"
    ... )
    LandmarkSet(water, road)
    """
    if not instruction or not instruction.strip():
        raise stmr_utilities.EmptyInstructionError()
    if extractor is None:
        extractor = RuleBasedLandmarkExtractor()
    try:
        phrase_tuple = extractor.extract(instruction)
    except stmr_utilities.PerceptionBackendError:
        raise
    except Exception as error:
        raise stmr_utilities.PerceptionBackendError(str(error)) from error
    return LandmarkSet(phrase_tuple)
