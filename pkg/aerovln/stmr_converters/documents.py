# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Read and write scene and episode documents.

Both documents are plain text. The first line is a versioned header,
every other line is either a ``key: value`` pair or, below a key with
an empty value, an indented row of a block. Blank lines and lines
starting with ``#`` are ignored.

A scene document::

    stmr-scene v1
    name: tiny
    cell_size: 5
    origin: 0 0
    legend:
      1: road
    height:
      0 0
      0 0
    label:
      1 1
      1 1

Grid rows are written north-first. The optional blocks
``canopy_bottom``, ``canopy_top`` and ``canopy_label`` follow the same
layout as ``height``. Episode documents store poses as
``x y z pitch roll yaw`` with angles in degrees.
Top-down map documents store the labels of all known cells as a block
of rows and the visited cells as a block of ``i j`` rows in the order
of their visit.
"""

from __future__ import annotations

import dataclasses
import math
import pathlib
import re
import typing

import numpy as np

from aerovln import stmr_converters
from aerovln import stmr_mapping
from aerovln import stmr_parameters
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = (
    "PoseToText",
    "TextToPose",
    "SceneToText",
    "TextToScene",
    "EpisodeToText",
    "TextToEpisode",
    "TopDownMapToText",
    "TextToTopDownMap",
    "load_scene",
    "load_episode",
    "dump_scene",
    "dump_episode",
)

_KEY_VALUE_PATTERN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.*)$")


@dataclasses.dataclass
class _Field:
    line_number: int
    value: str
    row_list: list[tuple[int, str]] = dataclasses.field(default_factory=list)


def _number(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"'{text}' isn't a finite number")
    return value


class _DocumentReader(stmr_utilities.StmrObject):
    """Split a document into its fields."""

    def __init__(
        self,
        header: str,
        required_field_tuple: tuple[str, ...],
        optional_field_tuple: tuple[str, ...],
        error_class: typing.Type[stmr_utilities.DocumentParseError],
    ):
        self.header = header
        self.required_field_tuple = required_field_tuple
        self.known_field_set = frozenset(required_field_tuple + optional_field_tuple)
        self.error_class = error_class

    def read(self, text: str) -> dict[str, _Field]:
        comment_prefix = stmr_converters.configurations.COMMENT_PREFIX
        line_iterator = (
            (number, line.rstrip())
            for number, line in enumerate(text.splitlines(), 1)
            if line.strip() and not line.lstrip().startswith(comment_prefix)
        )
        first = next(line_iterator, None)
        if first is None or first[1].strip() != self.header:
            raise self.error_class(
                f"document has to start with '{self.header}'",
                first[0] if first else 1,
            )
        field_dict: dict[str, _Field] = {}
        block: typing.Optional[_Field] = None
        for number, line in line_iterator:
            if line[0].isspace():
                if block is None:
                    raise self.error_class("indented row outside of a block", number)
                block.row_list.append((number, line.strip()))
                continue
            if not (match := _KEY_VALUE_PATTERN.match(line)):
                raise self.error_class("expected 'key: value'", number)
            key, value = match.groups()
            if key not in self.known_field_set:
                raise self.error_class("unknown field", number, key)
            if key in field_dict:
                raise self.error_class("duplicate field", number, key)
            field_dict[key] = _Field(number, value.strip())
            block = field_dict[key] if not value.strip() else None
        for key in self.required_field_tuple:
            if key not in field_dict:
                raise self.error_class("missing field", None, key)
        return field_dict

    def number_tuple(
        self, field_dict: dict[str, _Field], key: str, count: int
    ) -> tuple[float, ...]:
        field = field_dict[key]
        try:
            number_tuple = tuple(_number(part) for part in field.value.split())
        except ValueError as error:
            raise self.error_class(str(error), field.line_number, key) from error
        if len(number_tuple) != count:
            raise self.error_class(
                f"expected {count} numbers, found {len(number_tuple)}",
                field.line_number,
                key,
            )
        return number_tuple

    def grid(
        self, field_dict: dict[str, _Field], key: str, dtype: type
    ) -> np.ndarray:
        """Read a block of rows, north-first, into a south-first array."""
        field = field_dict[key]
        if field.value or not field.row_list:
            raise self.error_class("expected a block of rows", field.line_number, key)
        row_list = []
        for number, row in field.row_list:
            try:
                value_list = [_number(part) for part in row.split()]
            except ValueError as error:
                raise self.error_class(str(error), number, key) from error
            if dtype is int and not all(v.is_integer() for v in value_list):
                raise self.error_class("expected integer ids", number, key)
            if row_list and len(value_list) != len(row_list[0]):
                raise self.error_class(
                    f"expected {len(row_list[0])} columns, found {len(value_list)}",
                    number,
                    key,
                )
            row_list.append(value_list)
        return np.flipud(np.array(row_list, dtype=dtype))


def _write_grid(key: str, array: np.ndarray) -> list[str]:
    return [f"{key}:"] + [
        "  " + " ".join(stmr_utilities.format_number(v) for v in row)
        for row in np.flipud(np.asarray(array))
    ]


class PoseToText(stmr_converters.abc.Converter):
    """Write a pose as ``x y z pitch roll yaw``, angles in degrees.

    **Example:**

    >>> import math
    >>> from aerovln import stmr_converters, stmr_parameters
    >>> stmr_converters.PoseToText()(stmr_parameters.UavPose(1, 2, 5, yaw=math.pi))
    '1 2 5 0 0 180'
    """

    def convert(self, pose_to_convert: stmr_parameters.UavPose) -> str:
        digit_count = stmr_parameters.configurations.POSE_DIGIT_COUNT
        position = pose_to_convert.position
        angle_tuple = (
            pose_to_convert.pitch,
            pose_to_convert.roll,
            pose_to_convert.yaw,
        )
        return " ".join(
            stmr_utilities.format_number(round(value, digit_count))
            for value in position + tuple(math.degrees(a) for a in angle_tuple)
        )


class TextToPose(stmr_converters.abc.Converter):
    """Read a pose written by :class:`PoseToText`.

    Three numbers are read as a position without any rotation.

    :raises: ValueError if the text doesn't contain three or six
        finite numbers.
    """

    def convert(self, text_to_convert: str) -> stmr_parameters.UavPose:
        value_list = [_number(part) for part in text_to_convert.split()]
        match value_list:
            case [x, y, z]:
                return stmr_parameters.UavPose(x, y, z)
            case [x, y, z, pitch, roll, yaw]:
                return stmr_parameters.UavPose(
                    x, y, z, math.radians(pitch), math.radians(roll), math.radians(yaw)
                )
            case _:
                raise ValueError(
                    f"expected 3 or 6 numbers, found {len(value_list)}"
                )


class SceneToText(stmr_converters.abc.Converter):
    """Write a scene document."""

    def convert(self, scene_to_convert: stmr_worlds.Scene) -> str:
        scene = scene_to_convert
        line_list = [stmr_converters.configurations.SCENE_HEADER]
        if scene.name:
            line_list.append(f"name: {scene.name}")
        line_list.extend(
            (
                f"cell_size: {stmr_utilities.format_number(scene.cell_size)}",
                "origin: "
                + " ".join(stmr_utilities.format_number(c) for c in scene.origin),
                f"ceiling: {stmr_utilities.format_number(scene.ceiling)}",
                "legend:",
            )
        )
        line_list.extend(
            f"  {label_id}: {name}" for label_id, name in sorted(scene.legend.items())
        )
        line_list.extend(_write_grid("height", scene.height))
        line_list.extend(_write_grid("label", scene.label))
        if scene.has_canopy:
            for key in ("canopy_bottom", "canopy_top", "canopy_label"):
                line_list.extend(_write_grid(key, getattr(scene, key)))
        return "\n".join(line_list) + "\n"


class TextToScene(stmr_converters.abc.Converter):
    """Read a scene document.

    :raises: :class:`aerovln.stmr_utilities.SceneParseError` with the
        line and the field of the first violation.

    **Example:**

    >>> from aerovln import stmr_converters
    >>> scene = stmr_converters.TextToScene()(
    ...     "stmr-scene v1\\ncell_size: 5\\nlegend:\\n  1: road\\n"
    ...     "height:\\n  0 0\\n  0 0\\nlabel:\\n  1 1\\n  1 1\\n"
    ... )
    >>> scene.shape, scene.legend
    ((2, 2), {1: 'road'})
    """

    _grid_key_tuple = ("canopy_bottom", "canopy_top", "canopy_label")

    def __init__(self):
        self._reader = _DocumentReader(
            stmr_converters.configurations.SCENE_HEADER,
            ("cell_size", "legend", "height", "label"),
            ("name", "origin", "ceiling") + self._grid_key_tuple,
            stmr_utilities.SceneParseError,
        )

    def _legend(self, field: _Field) -> dict[int, str]:
        legend = {}
        if field.value or not field.row_list:
            raise stmr_utilities.SceneParseError(
                "expected a block of 'id: name' rows", field.line_number, "legend"
            )
        for number, row in field.row_list:
            label_id, separator, name = row.partition(":")
            if not separator or not label_id.strip().lstrip("-").isdigit():
                raise stmr_utilities.SceneParseError(
                    "expected 'id: name'", number, "legend"
                )
            if int(label_id) in legend:
                raise stmr_utilities.SceneParseError(
                    f"duplicate id {int(label_id)}", number, "legend"
                )
            legend[int(label_id)] = name.strip()
        return legend

    def convert(self, text_to_convert: str) -> stmr_worlds.Scene:
        reader = self._reader
        field_dict = reader.read(text_to_convert)
        (cell_size,) = reader.number_tuple(field_dict, "cell_size", 1)
        origin = (
            reader.number_tuple(field_dict, "origin", 2)
            if "origin" in field_dict
            else (0.0, 0.0)
        )
        ceiling = (
            reader.number_tuple(field_dict, "ceiling", 1)[0]
            if "ceiling" in field_dict
            else None
        )
        canopy_dict = {
            key: reader.grid(field_dict, key, int if key == "canopy_label" else float)
            for key in self._grid_key_tuple
            if key in field_dict
        }
        try:
            return stmr_worlds.Scene(
                cell_size,
                reader.grid(field_dict, "height", float),
                reader.grid(field_dict, "label", int),
                self._legend(field_dict["legend"]),
                origin,  # type: ignore
                ceiling=ceiling,
                name=field_dict["name"].value if "name" in field_dict else "",
                **canopy_dict,
            )
        except stmr_utilities.SceneParseError as error:
            if error.line_number is not None or error.field not in field_dict:
                raise
            raise stmr_utilities.SceneParseError(
                error.message,
                field_dict[error.field].line_number,
                error.field,
            ) from error


class EpisodeToText(stmr_converters.abc.Converter):
    """Write an episode document."""

    def convert(self, episode_to_convert: stmr_worlds.Episode) -> str:
        episode = episode_to_convert
        pose_to_text = PoseToText()
        line_list = [
            stmr_converters.configurations.EPISODE_HEADER,
            f"id: {episode.episode_id}",
        ]
        if episode.scene_name:
            line_list.append(f"scene: {episode.scene_name}")
        line_list.extend(
            (
                f"instruction: {episode.instruction}",
                f"start: {pose_to_text(episode.start)}",
                "goal: "
                + " ".join(stmr_utilities.format_number(c) for c in episode.goal),
                f"max_actions: {episode.max_actions}",
                "path:",
            )
        )
        line_list.extend(f"  {pose_to_text(p)}" for p in episode.ground_truth_path)
        return "\n".join(line_list) + "\n"


class TextToEpisode(stmr_converters.abc.Converter):
    """Read an episode document.

    :raises: :class:`aerovln.stmr_utilities.EpisodeParseError` with the
        line and the field of the first violation.
    """

    def __init__(self):
        self._reader = _DocumentReader(
            stmr_converters.configurations.EPISODE_HEADER,
            ("id", "instruction", "start", "goal", "path"),
            ("scene", "max_actions"),
            stmr_utilities.EpisodeParseError,
        )

    def _pose(self, text: str, line_number: int, key: str) -> stmr_parameters.UavPose:
        try:
            return TextToPose()(text)
        except ValueError as error:
            raise stmr_utilities.EpisodeParseError(
                str(error), line_number, key
            ) from error

    def convert(self, text_to_convert: str) -> stmr_worlds.Episode:
        reader = self._reader
        field_dict = reader.read(text_to_convert)
        start_field, path_field = field_dict["start"], field_dict["path"]
        if path_field.value:
            raise stmr_utilities.EpisodeParseError(
                "expected a block of poses", path_field.line_number, "path"
            )
        max_actions = None
        if "max_actions" in field_dict:
            field = field_dict["max_actions"]
            if not field.value.isdigit():
                raise stmr_utilities.EpisodeParseError(
                    f"'{field.value}' isn't a count", field.line_number, "max_actions"
                )
            max_actions = int(field.value)
        try:
            return stmr_worlds.Episode(
                field_dict["id"].value,
                field_dict["instruction"].value,
                self._pose(start_field.value, start_field.line_number, "start"),
                reader.number_tuple(field_dict, "goal", 3),
                [self._pose(row, n, "path") for n, row in path_field.row_list],
                max_actions,
                field_dict["scene"].value if "scene" in field_dict else "",
            )
        except stmr_utilities.EpisodeParseError as error:
            if error.line_number is not None or error.field not in field_dict:
                raise
            raise stmr_utilities.EpisodeParseError(
                error.message,
                field_dict[error.field].line_number,
                error.field,
            ) from error


class TopDownMapToText(stmr_converters.abc.Converter):
    """Write a top-down map document.

    **Example:**

    >>> from aerovln import stmr_converters, stmr_mapping
    >>> map = stmr_mapping.TopDownMap(5, {(0, 0): 1, (1, 1): 2}, [(0, 0)])
    >>> print(stmr_converters.TopDownMapToText()(map))
    stmr-map v1
    cell_size: 5
    offset: 0 0
    labels:
      0 2
      1 0
    trajectory:
      0 0
    <BLANKLINE>
    """

    def convert(self, map_to_convert: stmr_mapping.TopDownMap) -> str:
        map = map_to_convert
        line_list = [
            stmr_converters.configurations.MAP_HEADER,
            f"cell_size: {stmr_utilities.format_number(map.cell_size)}",
        ]
        if (bounds := map.index_bounds) is not None:
            line_list.append(f"offset: {bounds[0]} {bounds[1]}")
            label_array, _ = map.to_array(*bounds)
            line_list.extend(_write_grid("labels", label_array))
        if map.trajectory:
            line_list.append("trajectory:")
            line_list.extend(f"  {i} {j}" for i, j in map.trajectory)
        return "\n".join(line_list) + "\n"


class TextToTopDownMap(stmr_converters.abc.Converter):
    """Read a top-down map document.

    :raises: :class:`aerovln.stmr_utilities.DocumentParseError`
    """

    def __init__(self):
        self._reader = _DocumentReader(
            stmr_converters.configurations.MAP_HEADER,
            ("cell_size",),
            ("offset", "labels", "trajectory"),
            stmr_utilities.DocumentParseError,
        )

    def convert(self, text_to_convert: str) -> stmr_mapping.TopDownMap:
        reader = self._reader
        field_dict = reader.read(text_to_convert)
        (cell_size,) = reader.number_tuple(field_dict, "cell_size", 1)
        if cell_size <= 0:
            raise stmr_utilities.DocumentParseError(
                "cell size has to be > 0", field_dict["cell_size"].line_number
            )
        label_dict = {}
        if "labels" in field_dict:
            if "offset" not in field_dict:
                raise stmr_utilities.DocumentParseError(
                    "labels need an offset", field_dict["labels"].line_number
                )
            i_offset, j_offset = (
                int(v) for v in reader.number_tuple(field_dict, "offset", 2)
            )
            label_array = reader.grid(field_dict, "labels", int)
            label_dict = {
                (int(i) + i_offset, int(j) + j_offset): int(label_array[j, i])
                for j, i in zip(*np.nonzero(label_array))
            }
        trajectory = []
        for number, row in (
            field_dict["trajectory"].row_list if "trajectory" in field_dict else []
        ):
            part_list = row.split()
            if len(part_list) != 2 or not all(
                part.lstrip("-").isdigit() for part in part_list
            ):
                raise stmr_utilities.DocumentParseError(
                    "expected 'i j'", number, "trajectory"
                )
            trajectory.append((int(part_list[0]), int(part_list[1])))
        return stmr_mapping.TopDownMap(cell_size, label_dict, trajectory)


def load_scene(path: str | pathlib.Path) -> stmr_worlds.Scene:
    """Read a scene document from a file.

    :raises: OSError if the file can't be read and
        :class:`aerovln.stmr_utilities.SceneParseError` if it's invalid.
    """
    return TextToScene()(pathlib.Path(path).read_text(encoding="utf-8"))


def load_episode(path: str | pathlib.Path) -> stmr_worlds.Episode:
    """Read an episode document from a file."""
    return TextToEpisode()(pathlib.Path(path).read_text(encoding="utf-8"))


def dump_scene(scene: stmr_worlds.Scene, path: str | pathlib.Path):
    pathlib.Path(path).write_text(SceneToText()(scene), encoding="utf-8")


def dump_episode(episode: stmr_worlds.Episode, path: str | pathlib.Path):
    pathlib.Path(path).write_text(EpisodeToText()(episode), encoding="utf-8")
