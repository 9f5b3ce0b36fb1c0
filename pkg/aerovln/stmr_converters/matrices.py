# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""The matrix text which the planner reads."""

from __future__ import annotations

import re
import typing

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_converters
from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_utilities

__all__ = (
    "LegendToText",
    "StmrMatrixToText",
    "TextToStmrMatrix",
    "serialize_matrix",
)

_LEGEND_ENTRY_PATTERN = re.compile(r"(-?\d+):(.+?)(?=\s+-?\d+:|$)")
_INTEGER_PATTERN = re.compile(r"^-?\d+$")


class LegendToText(stmr_converters.abc.Converter):
    """Write the legend line of the matrix prompt.

    The ids of unexplored cells and of the past trajectory frame the
    scene categories.

    **Example:**

    >>> from aerovln import stmr_converters
    >>> stmr_converters.LegendToText()({2: "building", 1: "road"})
    '[0:Unexplored 1:road 2:building -1:your past trajectory]'
    """

    def convert(self, legend_to_convert: dict[int, str]) -> str:
        legend = {
            stmr_constants.UNEXPLORED: stmr_constants.UNEXPLORED_NAME,
            **dict(sorted(legend_to_convert.items())),
            stmr_constants.TRAJECTORY: stmr_constants.TRAJECTORY_NAME,
        }
        return "[" + " ".join(f"{k}:{v}" for k, v in legend.items()) + "]"


class StmrMatrixToText(stmr_converters.abc.Converter):
    """Write a matrix as its legend line followed by one line per row.

    Row ``0`` is the northernmost row. The centre cell is replaced by
    the orientation token of the UAV.
    """

    def convert(
        self,
        matrix_to_convert: stmr_matrices.StmrMatrix,
        pose: typing.Optional[stmr_parameters.UavPose] = None,
    ) -> str:
        """Serialize the matrix.

        :param matrix_to_convert: The matrix.
        :param pose: If given, the orientation token is derived from
            this pose. Otherwise the token of the matrix is used.
        """
        matrix = matrix_to_convert
        token = (
            matrix.orientation_token
            if pose is None
            else stmr_matrices.orientation_token(pose)
        )
        center = matrix.center
        row_list = []
        for row_index, row in enumerate(matrix.cells.tolist()):
            value_list = [str(value) for value in row]
            if row_index == center[0]:
                value_list[center[1]] = token
            row_list.append(" ".join(value_list))
        return "\n".join([LegendToText()(matrix.legend)] + row_list)


class TextToStmrMatrix(stmr_converters.abc.Converter):
    """Read the text written by :class:`StmrMatrixToText`.

    :param cell_metric: Meters per cell of the parsed matrices.

    The centre cell is read as ``-1`` since the text doesn't contain
    the label below the UAV.

    :raises: :class:`aerovln.stmr_utilities.MatrixFormatError` if the
        legend line is missing, the rows don't form an even sized square
        or the orientation token isn't at the centre.
    """

    def __init__(self, cell_metric: typing.Optional[float] = None):
        self.cell_metric = cell_metric

    def _legend(self, line: str) -> dict[int, str]:
        line = line.strip()
        if not (line.startswith("[") and line.endswith("]")):
            raise stmr_utilities.MatrixFormatError("first line has to be the legend")
        legend = {
            int(label_id): name.strip()
            for label_id, name in _LEGEND_ENTRY_PATTERN.findall(line[1:-1])
        }
        for reserved in (stmr_constants.UNEXPLORED, stmr_constants.TRAJECTORY):
            legend.pop(reserved, None)
        return legend

    def convert(self, text_to_convert: str) -> stmr_matrices.StmrMatrix:
        line_list = [line for line in text_to_convert.splitlines() if line.strip()]
        if not line_list:
            raise stmr_utilities.MatrixFormatError("text is empty")
        legend = self._legend(line_list[0])
        token_list_list = [line.split() for line in line_list[1:]]
        size = len(token_list_list)
        if not size or any(len(token_list) != size for token_list in token_list_list):
            raise stmr_utilities.MatrixFormatError(
                f"expected a square of values, found {size} rows"
            )
        token_position_list = [
            (row, column)
            for row, token_list in enumerate(token_list_list)
            for column, token in enumerate(token_list)
            if not _INTEGER_PATTERN.match(token)
        ]
        if token_position_list != [(size // 2, size // 2)]:
            raise stmr_utilities.MatrixFormatError(
                "expected exactly one orientation token at the centre, found "
                f"tokens at {token_position_list}"
            )
        row, column = token_position_list[0]
        orientation_token = token_list_list[row][column]
        token_list_list[row][column] = str(stmr_constants.TRAJECTORY)
        cells = np.array(token_list_list, dtype=int)
        return stmr_matrices.StmrMatrix(
            cells, legend, orientation_token, self.cell_metric
        )


def serialize_matrix(
    matrix: stmr_matrices.StmrMatrix,
    pose: typing.Optional[stmr_parameters.UavPose] = None,
) -> str:
    """Serialize a matrix, see :class:`StmrMatrixToText`.

    **Example:**

    >>> import numpy as np
    >>> from aerovln import stmr_converters, stmr_matrices
    >>> cells = np.zeros((2, 2), dtype=int)
    >>> cells[1, 1] = -1
    >>> print(stmr_converters.serialize_matrix(
    ...     stmr_matrices.StmrMatrix(cells, {1: "road"}, "west0")
    ... ))
    [0:Unexplored 1:road -1:your past trajectory]
    0 0
    0 west0
    """
    return StmrMatrixToText()(matrix, pose)
