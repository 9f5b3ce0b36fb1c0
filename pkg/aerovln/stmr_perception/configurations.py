# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Configure landmark extraction and mask filtering.

Used by :mod:`aerovln.stmr_perception`.
"""

import ranges

SIMILARITY_THRESHOLD: float = 0.8
"""A mask is only kept if its caption is more similar than this value
to one of the instruction landmarks. The comparison is strict."""

SIMILARITY_THRESHOLD_RANGE: ranges.Range = ranges.Range(
    0, 1, include_start=False, include_end=False
)
"""Allowed values of the similarity threshold."""

TOKEN_PATTERN: str = r"(?u)[^\W_]+"
"""Regular expression which finds the tokens of a text. Tokens are
lowercased, there is no stemming and single characters count as tokens."""

LANDMARK_LEXICON: tuple[str, ...] = (
    "airport",
    "bridge",
    "building",
    "bush",
    "car",
    "church",
    "crossroad",
    "field",
    "forest",
    "fountain",
    "garden",
    "grass",
    "highway",
    "hill",
    "house",
    "intersection",
    "lake",
    "lawn",
    "parking lot",
    "park",
    "path",
    "playground",
    "pond",
    "railway",
    "river",
    "road",
    "roof",
    "roundabout",
    "square",
    "stadium",
    "street",
    "swimming pool",
    "tower",
    "tree",
    "wall",
    "water",
)
"""Category phrases which the rule based landmark extractor knows
without a scene legend. Multi word phrases are matched before their
single word parts."""

MODIFIER_LEXICON: frozenset[str] = frozenset(
    (
        "big",
        "black",
        "blue",
        "brown",
        "green",
        "grey",
        "gray",
        "high",
        "large",
        "long",
        "low",
        "old",
        "orange",
        "red",
        "round",
        "small",
        "tall",
        "white",
        "wide",
        "yellow",
    )
)
"""Adjectives which are kept in front of an extracted landmark, so
that 'white building' stays one phrase."""

LANDMARK_EXTRACTION_PROMPT: str = (
    "List the landmarks which the following UAV navigation instruction "
    "mentions. Answer with one lowercase noun phrase per line and nothing "
    "else.\nInstruction: ${instruction}"
)
"""Prompt which asks a language model for the landmarks of an
instruction. ``${instruction}`` is replaced by the instruction."""

# Cleanup
del ranges
