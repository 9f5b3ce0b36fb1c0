# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Result tables: a CSV file for machines and a text table for humans."""

from __future__ import annotations

import csv
import io
import pathlib
import typing

from aerovln import stmr_evaluations

__all__ = ("result_to_row", "write_results_csv", "results_to_csv", "format_summary")


def result_to_row(result: stmr_evaluations.EpisodeResult) -> dict[str, str]:
    """The CSV row of one episode.

    **Example:**

    >>> from aerovln import stmr_evaluations, stmr_parameters
    >>> result = stmr_evaluations.EpisodeResult(
    ...     "e0", (0, 0, 0), [stmr_parameters.UavPose(3, 4, 12)],
    ...     stmr_evaluations.StoppedBy.MAX_ACTIONS,
    ... )
    >>> stmr_evaluations.result_to_row(result)["ne"]
    '13.000'
    """
    digit_count = stmr_evaluations.configurations.NE_DIGIT_COUNT
    return dict(
        episode_id=result.episode_id,
        ne=f"{result.ne:.{digit_count}f}",
        success=str(int(result.success)),
        oracle_success=str(int(result.oracle_success)),
        steps=str(result.step_count),
        stopped_by=result.stopped_by.value,
    )


def _write_rows(
    result_iterable: typing.Iterable[stmr_evaluations.EpisodeResult],
    text_file: typing.TextIO,
):
    writer = csv.DictWriter(
        text_file,
        fieldnames=stmr_evaluations.configurations.CSV_FIELD_TUPLE,
        lineterminator="\n",
    )
    writer.writeheader()
    for result in result_iterable:
        writer.writerow(result_to_row(result))


def results_to_csv(
    results: typing.Iterable[stmr_evaluations.EpisodeResult],
) -> str:
    """CSV text with one row per episode, in the given order."""
    text_file = io.StringIO()
    _write_rows(results, text_file)
    return text_file.getvalue()


def write_results_csv(
    results: typing.Iterable[stmr_evaluations.EpisodeResult],
    path: str | pathlib.Path,
):
    """Write :func:`results_to_csv` to a file."""
    with open(path, "w", encoding="utf-8", newline="") as text_file:
        _write_rows(results, text_file)


def format_summary(
    summary_dict: dict[str, stmr_evaluations.Summary],
) -> str:
    """A text table with one row per method and the columns NE/m, SR/% and OSR/%.

    **Example:**

    >>> from aerovln import stmr_evaluations
    >>> print(stmr_evaluations.format_summary(
    ...     {"stmr": stmr_evaluations.Summary(10, 119.5, 10.8, 23.0)}
    ... ))
    Method  Episodes    NE/m  SR/%  OSR/%
    stmr          10  119.50  10.8   23.0
    """
    header_tuple = ("Method", "Episodes", "NE/m", "SR/%", "OSR/%")
    row_list = [
        (
            name,
            str(summary.episode_count),
            f"{summary.navigation_error:.2f}",
            f"{summary.success_rate:.1f}",
            f"{summary.oracle_success_rate:.1f}",
        )
        for name, summary in summary_dict.items()
    ]
    width_list = [
        max(len(row[column]) for row in [header_tuple] + row_list)
        for column in range(len(header_tuple))
    ]
    return "\n".join(
        "  ".join(
            cell.ljust(width) if column == 0 else cell.rjust(width)
            for column, (cell, width) in enumerate(zip(row, width_list))
        )
        for row in [header_tuple] + row_list
    )
