# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Point clouds where each point carries a semantic label."""

from __future__ import annotations

import typing

import numpy as np

from aerovln import stmr_utilities

__all__ = ("SemanticPointCloud",)


class SemanticPointCloud(stmr_utilities.StmrObject):
    """World points ``(X, Y, Z)`` in meters, each with a semantic id.

    :param points: ``(N, 3)`` float array.
    :param labels: ``(N,)`` integer array.
    :raises: ValueError if the arrays don't match or if a coordinate
        isn't finite.

    **Example:**

    >>> from aerovln import stmr_geometry
    >>> cloud = stmr_geometry.SemanticPointCloud.from_point_sequence(
    ...     [(0, 0, 1, 2), (1, 0, 1, 2)]
    ... )
    >>> len(cloud)
    2
    """

    def __init__(self, points: np.ndarray, labels: np.ndarray):
        points = np.asarray(points, dtype=float).reshape(-1, 3)
        labels = np.asarray(labels, dtype=int).reshape(-1)
        if len(points) != len(labels):
            raise ValueError(
                f"Found {len(points)} points, but {len(labels)} labels."
            )
        if not np.all(np.isfinite(points)):
            raise ValueError("Point cloud coordinates have to be finite.")
        self.points = points
        self.labels = labels

    @classmethod
    def empty(cls) -> SemanticPointCloud:
        return cls(np.empty((0, 3)), np.empty(0, dtype=int))

    @classmethod
    def from_point_sequence(
        cls, point_sequence: typing.Sequence[tuple[float, float, float, int]]
    ) -> SemanticPointCloud:
        """Build cloud from ``(X, Y, Z, label)`` tuples."""
        if not point_sequence:
            return cls.empty()
        array = np.asarray(point_sequence, dtype=float)
        return cls(array[:, :3], array[:, 3].astype(int))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> typing.Iterator[tuple[float, float, float, int]]:
        for (x, y, z), label in zip(self.points.tolist(), self.labels.tolist()):
            yield x, y, z, label

    def __eq__(self, other: typing.Any) -> bool:
        return (
            isinstance(other, SemanticPointCloud)
            and np.array_equal(self.points, other.points)
            and np.array_equal(self.labels, other.labels)
        )

    def __repr_content__(self) -> str:
        return f"{len(self)} points"

    @property
    def label_set(self) -> frozenset[int]:
        return frozenset(self.labels.tolist())

    def concatenate(self, other: SemanticPointCloud) -> SemanticPointCloud:
        return type(self)(
            np.concatenate((self.points, other.points)),
            np.concatenate((self.labels, other.labels)),
        )

    def validate_labels(self, registered_label_collection: typing.Collection[int]):
        """Raise if a point carries a label outside of the collection.

        :raises: :class:`aerovln.stmr_utilities.UnregisteredLabelError`
        """
        registered = set(registered_label_collection)
        for label in sorted(self.label_set):
            if label not in registered:
                raise stmr_utilities.UnregisteredLabelError(
                    label, tuple(sorted(registered))
                )
