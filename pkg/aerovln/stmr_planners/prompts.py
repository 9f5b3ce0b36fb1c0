# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Assemble the planner prompt from versioned templates."""

from __future__ import annotations

import functools
import importlib.resources
import os
import string
import typing

import ranges

from aerovln import stmr_constants
from aerovln import stmr_converters
from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_planners
from aerovln import stmr_plans
from aerovln import stmr_utilities

__all__ = (
    "PromptTemplate",
    "load_template",
    "HistoryEntry",
    "merge_history",
    "history_to_text",
    "PromptBundle",
    "build_prompt",
)


class PromptTemplate(stmr_utilities.StmrObject):
    """A prompt template with ``${name}`` placeholders.

    :param name: Name of the template, for instance ``stmr_v1``.
    :param text: The template text.
    :raises: :class:`aerovln.stmr_utilities.TemplateError` if a
        required placeholder is missing or the template contains a
        placeholder which isn't known.

    **Example:**

    >>> from aerovln import stmr_planners
    >>> template = stmr_planners.PromptTemplate(
    ...     "short", "${instruction}|${history}|${map}|${plan}"
    ... )
    >>> template.render(instruction="i", history="[]", map="m", plan="p")
    'i|[]|m|p'
    """

    def __init__(self, name: str, text: str):
        configurations = stmr_planners.configurations
        self.name = name
        self.text = text
        self._template = string.Template(text)
        if not self._template.is_valid():
            raise stmr_utilities.TemplateError(name, ("valid placeholder syntax",))
        identifier_set = set(self._template.get_identifiers())
        missing_tuple = tuple(
            placeholder
            for placeholder in configurations.REQUIRED_PLACEHOLDER_TUPLE
            if placeholder not in identifier_set
        )
        unknown_tuple = tuple(
            sorted(
                identifier_set.difference(
                    configurations.REQUIRED_PLACEHOLDER_TUPLE
                    + configurations.OPTIONAL_PLACEHOLDER_TUPLE
                )
            )
        )
        if missing_tuple or unknown_tuple:
            raise stmr_utilities.TemplateError(name, missing_tuple, unknown_tuple)

    def __repr_content__(self) -> str:
        return self.name

    @functools.cached_property
    def _task_description_template(self) -> string.Template:
        # Everything before the line with the first required placeholder.
        offset = min(
            self.text.find("${" + placeholder + "}")
            for placeholder in stmr_planners.configurations.REQUIRED_PLACEHOLDER_TUPLE
        )
        return string.Template(self.text[: self.text.rfind("\n", 0, offset) + 1])

    def render(self, **value_dict: typing.Any) -> str:
        """Fill every placeholder of the template.

        :raises: :class:`aerovln.stmr_utilities.TemplateError` if a
            placeholder of the template doesn't get any value.
        """
        try:
            return self._template.substitute(value_dict)
        except KeyError as error:
            raise stmr_utilities.TemplateError(self.name, error.args) from error

    def task_description(self, **value_dict: typing.Any) -> str:
        """The rendered part of the template in front of the input blocks."""
        return self._task_description_template.safe_substitute(value_dict).rstrip()


@functools.cache
def _template_text(name: str) -> str:
    if os.path.isfile(name):
        with open(name, "r", encoding="utf-8") as template_file:
            return template_file.read()
    resource = importlib.resources.files("aerovln.stmr_planners").joinpath(
        "templates", f"{name}.txt"
    )
    try:
        return resource.read_text(encoding="utf-8")
    except FileNotFoundError as error:
        raise stmr_utilities.TemplateError(name, ("template file",)) from error


def load_template(name: str) -> PromptTemplate:
    """Load a bundled template by name or any template file by path.

    **Example:**

    >>> from aerovln import stmr_planners
    >>> stmr_planners.load_template("stmr_v1")
    PromptTemplate(stmr_v1)
    """
    template_name = os.path.splitext(os.path.basename(name))[0]
    return PromptTemplate(template_name, _template_text(name))


class HistoryEntry(typing.NamedTuple):
    """One executed action of the history block.

    Merged entries may exceed the per-action ranges, therefore the
    entry keeps plain numbers instead of an
    :class:`aerovln.stmr_parameters.Action`.
    """

    verb: stmr_parameters.ActionVerb
    degree: stmr_constants.Real = 0
    distance: stmr_constants.Real = 0
    collided: bool = False

    @classmethod
    def from_action(
        cls, action: stmr_parameters.Action, collided: bool = False
    ) -> HistoryEntry:
        return cls(action.verb, action.degree, action.distance, collided)

    def merge(self, other: HistoryEntry) -> typing.Optional[HistoryEntry]:
        """Combine two consecutive entries or return ``None``."""
        if (
            self.verb is not other.verb
            or self.collided
            or other.collided
            or self.verb is stmr_parameters.ActionVerb.STOP
        ):
            return None
        if self.verb.is_turn:
            if self.distance == 0 and other.distance == 0:
                return self._replace(degree=self.degree + other.degree)
        elif self.degree == 0 and other.degree == 0:
            return self._replace(distance=self.distance + other.distance)
        return None

    def to_text(self) -> str:
        text = (
            f"({self.verb.value}, {stmr_utilities.format_number(self.degree)} "
            f"degrees, {stmr_utilities.format_number(self.distance)} meters"
        )
        if self.collided:
            text += ", collision"
        return text + ")"


def merge_history(
    history: typing.Iterable[HistoryEntry | stmr_parameters.Action],
) -> tuple[HistoryEntry, ...]:
    """Merge consecutive short movements of the same kind.

    Turns without travel add up their degrees, straight, back, lift and
    down movements without turn add up their distances. Entries with a
    collision are never merged.

    **Example:**

    >>> from aerovln import stmr_parameters, stmr_planners
    >>> Action = stmr_parameters.Action
    >>> entry_tuple = stmr_planners.merge_history(
    ...     [Action("straight", 0, 10), Action("straight", 0, 10), Action("left", 15)]
    ... )
    >>> [(entry.verb.value, entry.degree, entry.distance) for entry in entry_tuple]
    [('straight', 0, 20), ('left', 15, 0)]
    """
    entry_list: list[HistoryEntry] = []
    for item in history:
        entry = (
            HistoryEntry.from_action(item)
            if isinstance(item, stmr_parameters.Action)
            else item
        )
        if entry_list and (merged := entry_list[-1].merge(entry)) is not None:
            entry_list[-1] = merged
        else:
            entry_list.append(entry)
    return tuple(entry_list)


def history_to_text(
    history: typing.Iterable[HistoryEntry | stmr_parameters.Action],
) -> str:
    """Render the merged history as a bracketed list.

    **Example:**

    >>> from aerovln import stmr_planners
    >>> stmr_planners.history_to_text([])
    '[]'
    """
    return "[" + ", ".join(entry.to_text() for entry in merge_history(history)) + "]"


class PromptBundle(typing.NamedTuple):
    """The blocks of one planner prompt and their assembled text."""

    template_name: str
    task_description: str
    instruction: str
    history: str
    map_text: str
    plan_text: str
    text: str


def build_prompt(
    plan: stmr_plans.PlanState,
    history: typing.Iterable[HistoryEntry | stmr_parameters.Action],
    map_text: str,
    instruction: str,
    legend: typing.Optional[dict[int, str]] = None,
    template: typing.Optional[PromptTemplate | str] = None,
    matrix_size: typing.Optional[int] = None,
    cell_metric: typing.Optional[float] = None,
    degree_range: typing.Optional[ranges.Range] = None,
    distance_range: typing.Optional[ranges.Range] = None,
) -> PromptBundle:
    """Assemble the prompt of one step.

    :param plan: The current plan ledger.
    :param history: The executed actions of the episode.
    :param map_text: The serialized map: the matrix text for the STMR
        encoding, a place description or a list of landmark
        observations for the other encodings.
    :param instruction: The navigation instruction.
    :param legend: The current legend. It fills the ``${legend}``
        placeholder of templates which don't get the legend with the
        map text.
    :param template: A template or the name of a bundled template.
        Defaults to ``stmr_v1``.
    :param matrix_size: Defaults to
        :const:`aerovln.stmr_matrices.configurations.MATRIX_SIZE`.
    :param cell_metric: Defaults to
        :const:`aerovln.stmr_matrices.configurations.CELL_METRIC`.
    :param degree_range: Defaults to
        :const:`aerovln.stmr_parameters.configurations.DEGREE_RANGE`.
    :param distance_range: Defaults to
        :const:`aerovln.stmr_parameters.configurations.DISTANCE_RANGE`.
    :raises: :class:`aerovln.stmr_utilities.TemplateError` on template
        problems.

    The assembly is deterministic: equal inputs give byte-identical
    prompts.
    """
    if template is None:
        template = stmr_planners.configurations.SPATIAL_ENCODING_TO_TEMPLATE_NAME[
            "stmr"
        ]
    if isinstance(template, str):
        template = load_template(template)
    if matrix_size is None:
        matrix_size = stmr_matrices.configurations.MATRIX_SIZE
    if cell_metric is None:
        cell_metric = stmr_matrices.configurations.CELL_METRIC
    if degree_range is None:
        degree_range = stmr_parameters.configurations.DEGREE_RANGE
    if distance_range is None:
        distance_range = stmr_parameters.configurations.DISTANCE_RANGE

    instruction = " ".join(instruction.split())
    history_text = history_to_text(history)
    plan_text = stmr_converters.PlanStateToText()(plan)
    value_dict = dict(
        instruction=instruction,
        history=history_text,
        map=map_text,
        plan=plan_text,
        legend=stmr_converters.LegendToText()(legend or {}),
        matrix_size=matrix_size,
        center=matrix_size // 2,
        cell_metric=stmr_utilities.format_number(cell_metric),
        max_degree=stmr_utilities.format_number(degree_range.end),
        max_distance=stmr_utilities.format_number(distance_range.end),
    )
    return PromptBundle(
        template.name,
        template.task_description(**value_dict),
        instruction,
        history_text,
        map_text,
        plan_text,
        template.render(**value_dict),
    )
