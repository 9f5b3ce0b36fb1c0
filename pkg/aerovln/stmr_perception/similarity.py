# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""TF-IDF text similarity between landmark phrases and mask captions.

Term counts come from a :class:`sklearn.feature_extraction.text.CountVectorizer`.
Each count is weighted with ``ln(N / (1 + df)) + 1`` where ``N`` is the
count of corpus documents and ``df`` the count of documents which
contain the term. Two texts are compared by the cosine of their
weighted vectors.
"""

from __future__ import annotations

import typing

import numpy as np
from sklearn import feature_extraction
from sklearn import metrics

from aerovln import stmr_perception
from aerovln import stmr_utilities

__all__ = ("TfidfMatcher", "tfidf_similarity")


class TfidfMatcher(stmr_utilities.StmrObject):
    """Compare texts by TF-IDF cosine similarity over a fixed corpus.

    :param corpus: Documents which define the vocabulary and the
        document frequencies. Texts which are compared later on should
        be part of the corpus, otherwise their unknown tokens are ignored.

    **Example:**

    >>> from aerovln import stmr_perception
    >>> matcher = stmr_perception.TfidfMatcher(["road", "river", "red road"])
    >>> matcher.similarity("road", "road")
    1.0
    >>> matcher.similarity("river", "road")
    0.0
    """

    def __init__(self, corpus: typing.Iterable[str]):
        self.corpus = tuple(corpus)
        self._vectorizer = feature_extraction.text.CountVectorizer(
            lowercase=True,
            token_pattern=stmr_perception.configurations.TOKEN_PATTERN,
        )
        self._analyzer = self._vectorizer.build_analyzer()
        if any(self._analyzer(document) for document in self.corpus):
            counts = self._vectorizer.fit_transform(self.corpus)
            document_frequency = np.asarray((counts > 0).sum(axis=0)).ravel()
            self.idf = np.log(len(self.corpus) / (1 + document_frequency)) + 1
        else:
            self._vectorizer = None
            self.idf = np.empty(0)

    def __repr_content__(self) -> str:
        return f"{len(self.corpus)} documents"

    def tokenize(self, text: str) -> list[str]:
        """Lowercased tokens of a text."""
        return self._analyzer(text)

    def _count_matrix(self, text_sequence: typing.Sequence[str]):
        for text in text_sequence:
            if not self.tokenize(text):
                raise stmr_utilities.UndefinedSimilarityError(text)
        if self._vectorizer is None:
            return None
        return self._vectorizer.transform(text_sequence)

    def similarity_matrix(
        self,
        row_text_sequence: typing.Sequence[str],
        column_text_sequence: typing.Sequence[str],
    ) -> np.ndarray:
        """Similarity of every row text with every column text.

        :return: ``(rows, columns)`` array with values in ``[0, 1]``.
            Texts with equal term counts have a similarity of exactly ``1``.
        :raises: :class:`aerovln.stmr_utilities.UndefinedSimilarityError`
            if a text doesn't contain any token.
        """
        row_counts = self._count_matrix(row_text_sequence)
        column_counts = self._count_matrix(column_text_sequence)
        shape = (len(row_text_sequence), len(column_text_sequence))
        if row_counts is None or 0 in shape:
            return np.zeros(shape)
        similarity = metrics.pairwise.cosine_similarity(
            row_counts.multiply(self.idf).tocsr(),
            column_counts.multiply(self.idf).tocsr(),
        )
        similarity = np.clip(similarity, 0.0, 1.0)
        row_dense = row_counts.toarray()
        column_dense = column_counts.toarray()
        for row_index, row in enumerate(row_dense):
            if not row.any():
                continue
            identical = np.all(column_dense == row, axis=1)
            similarity[row_index, identical] = 1.0
        return similarity

    def similarity(self, text0: str, text1: str) -> float:
        """Similarity of two texts in ``[0, 1]``."""
        return float(self.similarity_matrix([text0], [text1])[0, 0])


def tfidf_similarity(
    text0: str, text1: str, corpus: typing.Optional[typing.Iterable[str]] = None
) -> float:
    """TF-IDF cosine similarity of two texts.

    :param text0: The first text.
    :param text1: The second text.
    :param corpus: Documents which define document frequencies. The
        compared texts are added if the corpus doesn't contain them.
        Defaults to the two texts.
    :raises: :class:`aerovln.stmr_utilities.UndefinedSimilarityError`
        if a text doesn't contain any token.

    **Example:**

    >>> from aerovln import stmr_perception
    >>> stmr_perception.tfidf_similarity("red building", "red building")
    1.0
    >>> stmr_perception.tfidf_similarity("river", "parking lot")
    0.0
    """
    document_list = list(corpus or ())
    for text in (text0, text1):
        if text not in document_list:
            document_list.append(text)
    return TfidfMatcher(document_list).similarity(text0, text1)
