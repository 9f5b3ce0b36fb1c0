# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""2D semantic masks and their filtering by instruction landmarks."""

from __future__ import annotations

import re
import typing

import numpy as np

from aerovln import stmr_perception
from aerovln import stmr_utilities

__all__ = ("PerceivedMask", "LegendMatcher", "join_landmarks_to_legend", "filter_masks")


def _validate_threshold(tau: typing.Optional[float]) -> float:
    if tau is None:
        tau = stmr_perception.configurations.SIMILARITY_THRESHOLD
    if tau not in stmr_perception.configurations.SIMILARITY_THRESHOLD_RANGE:
        raise ValueError(f"Similarity threshold has to lie in (0, 1), found {tau}.")
    return tau


class PerceivedMask(stmr_utilities.StmrObject):
    """A region of the current view together with its caption.

    :param mask: ``(height, width)`` boolean array.
    :param caption: Text which describes the region.
    :param label: Semantic id. Oracle perceptors set it directly,
        otherwise :func:`filter_masks` assigns it after matching.
    :param matched_landmark: The instruction landmark which matched the
        caption.
    :param similarity: Similarity of caption and matched landmark.
    :raises: ValueError if the mask is empty.
    """

    def __init__(
        self,
        mask: np.ndarray,
        caption: str,
        label: typing.Optional[int] = None,
        matched_landmark: typing.Optional[str] = None,
        similarity: typing.Optional[float] = None,
    ):
        self.mask = np.asarray(mask, dtype=bool)
        if not self.mask.any():
            raise ValueError("A perceived mask has to contain at least one pixel.")
        self.caption = caption
        self.label = label
        self.matched_landmark = matched_landmark
        self.similarity = similarity

    def __repr_content__(self) -> str:
        return f"{self.caption!r}, pixels={self.pixel_count}, label={self.label}"

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, PerceivedMask)
            and np.array_equal(self.mask, other.mask)
            and stmr_utilities.test_if_objects_are_equal_by_parameter_tuple(
                self, other, ("caption", "label", "matched_landmark", "similarity")
            )
        )

    @property
    def pixel_count(self) -> int:
        return int(self.mask.sum())

    def replace(self, **kwargs) -> PerceivedMask:
        value_dict = dict(
            mask=self.mask,
            caption=self.caption,
            label=self.label,
            matched_landmark=self.matched_landmark,
            similarity=self.similarity,
        )
        value_dict.update(kwargs)
        return type(self)(**value_dict)


class LegendMatcher(stmr_utilities.StmrObject):
    """Join landmark phrases to the category ids of a legend.

    :param legend: Maps semantic ids to category names.
    :param tau: Similarity threshold. Defaults to
        :const:`aerovln.stmr_perception.configurations.SIMILARITY_THRESHOLD`.
    :param modifier_lexicon: Words which are stripped from the front of
        a phrase if the full phrase doesn't match. Defaults to
        :const:`aerovln.stmr_perception.configurations.MODIFIER_LEXICON`.

    A landmark first tries its full phrase ('white building'), then the
    phrase without leading modifiers ('building'). It is joined to the
    category with the highest TF-IDF similarity above ``tau``. On equal
    scores the lower id wins.

    **Example:**

    >>> from aerovln import stmr_perception
    >>> matcher = stmr_perception.LegendMatcher({1: "road", 2: "building"})
    >>> matcher.match("white building")
    2
    """

    def __init__(
        self,
        legend: dict[int, str],
        tau: typing.Optional[float] = None,
        modifier_lexicon: typing.Optional[typing.Iterable[str]] = None,
    ):
        if modifier_lexicon is None:
            modifier_lexicon = stmr_perception.configurations.MODIFIER_LEXICON
        self.legend = dict(sorted(legend.items()))
        self.tau = _validate_threshold(tau)
        self._modifier_set = frozenset(modifier_lexicon)
        self._token_pattern = re.compile(stmr_perception.configurations.TOKEN_PATTERN)

    def _candidate_tuple(self, landmark: str) -> tuple[str, ...]:
        token_list = self._token_pattern.findall(landmark.lower())
        start = 0
        while start < len(token_list) - 1 and token_list[start] in self._modifier_set:
            start += 1
        return stmr_utilities.uniqify_sequence(
            (" ".join(token_list), " ".join(token_list[start:]))
        )

    def match(self, landmark: str) -> typing.Optional[int]:
        """Legend id of a landmark or ``None``."""
        if not self.legend:
            return None
        id_list, name_list = list(self.legend), list(self.legend.values())
        for candidate in self._candidate_tuple(landmark):
            if not candidate:
                continue
            matcher = stmr_perception.TfidfMatcher(name_list + [candidate])
            score_array = matcher.similarity_matrix([candidate], name_list)[0]
            best_index = int(np.argmax(score_array))
            if score_array[best_index] > self.tau:
                return id_list[best_index]
        return None

    def join(self, landmarks: typing.Iterable[str]) -> dict[str, int]:
        """Map each joinable landmark to its legend id.

        Landmarks without a counterpart in the legend are omitted and a
        warning is logged.
        """
        landmark_to_label = {}
        for landmark in landmarks:
            label = self.match(landmark)
            if label is None:
                self._logger.warning(
                    f"Landmark '{landmark}' doesn't match any category of "
                    f"the legend {tuple(self.legend.values())}; it is omitted."
                )
            else:
                landmark_to_label[landmark] = label
        return landmark_to_label


def join_landmarks_to_legend(
    landmarks: typing.Iterable[str],
    legend: dict[int, str],
    tau: typing.Optional[float] = None,
) -> dict[str, int]:
    """Map landmark phrases to legend ids, see :class:`LegendMatcher`.

    **Example:**

    >>> from aerovln import stmr_perception
    >>> stmr_perception.join_landmarks_to_legend(
    ...     ["water", "road"], {3: "water", 1: "road"}
    ... )
    {'water': 3, 'road': 1}
    """
    return LegendMatcher(legend, tau).join(landmarks)


def filter_masks(
    masks: typing.Sequence[PerceivedMask],
    landmarks: typing.Iterable[str],
    tau: typing.Optional[float] = None,
    legend: typing.Optional[dict[int, str]] = None,
) -> tuple[PerceivedMask, ...]:
    """Keep masks whose caption matches an instruction landmark.

    :param masks: The perceived masks of one step.
    :param landmarks: The instruction landmarks.
    :param tau: Similarity threshold in ``(0, 1)``. Defaults to
        :const:`aerovln.stmr_perception.configurations.SIMILARITY_THRESHOLD`.
    :param legend: If given, kept masks get the legend id of their
        matched landmark. Otherwise (or if the landmark isn't part of
        the legend) they keep the label the perceptor gave them.
    :return: Copies of the kept masks with ``matched_landmark``,
        ``similarity`` and ``label`` set, in input order.

    The TF-IDF corpus consists of all landmarks and all captions of
    the step. A mask is kept if its best similarity is strictly above
    ``tau``; the first landmark wins on equal scores. Kept masks
    without any label are dropped with a warning.
    """
    tau = _validate_threshold(tau)
    landmark_tuple = tuple(landmarks)
    if not masks or not landmark_tuple:
        return tuple([])
    matcher = stmr_perception.TfidfMatcher(
        landmark_tuple + tuple(mask.caption for mask in masks)
    )
    # Captions without any token can't match.
    masks = [mask for mask in masks if matcher.tokenize(mask.caption)]
    if not masks:
        return tuple([])
    caption_list = [mask.caption for mask in masks]
    score_matrix = matcher.similarity_matrix(caption_list, landmark_tuple)
    landmark_to_label = (
        LegendMatcher(legend, tau).join(landmark_tuple) if legend else {}
    )
    kept_list = []
    for mask, score_array in zip(masks, score_matrix):
        best_index = int(np.argmax(score_array))
        score = float(score_array[best_index])
        if not score > tau:
            continue
        landmark = landmark_tuple[best_index]
        label = landmark_to_label.get(landmark, mask.label)
        if label is None:
            mask._logger.warning(
                f"Dropped mask {mask}: landmark '{landmark}' has no legend id."
            )
            continue
        kept_list.append(
            mask.replace(matched_landmark=landmark, similarity=score, label=label)
        )
    return tuple(kept_list)
