# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""The run-time record of a command: defaults, config file and flags."""

from __future__ import annotations

import dataclasses
import math
import os
import typing

import dotenv

from aerovln import stmr_commands
from aerovln import stmr_evaluations
from aerovln import stmr_mapping
from aerovln import stmr_matrices
from aerovln import stmr_utilities

__all__ = ("RunConfig",)


def _positive(parse: typing.Callable) -> typing.Callable:
    def parse_positive(text: str):
        value = parse(text)
        if not value > 0:
            raise ValueError("has to be > 0")
        return value

    return parse_positive


def _finite_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ValueError("has to be finite")
    return value


def _optional_float(text: str) -> typing.Optional[float]:
    return None if text.strip().lower() in ("", "none", "default") else float(text)


def _choice(choice_tuple: tuple[str, ...]) -> typing.Callable:
    def parse_choice(text: str) -> str:
        if text not in choice_tuple:
            raise ValueError(f"has to be one of {choice_tuple}")
        return text

    return parse_choice


def _text(text: str) -> str:
    if not text.strip():
        raise ValueError("is empty")
    return text.strip()


def _text_tuple(text: str | typing.Sequence[str]) -> tuple[str, ...]:
    part_tuple = tuple(text.split() if isinstance(text, str) else text)
    if not part_tuple:
        raise ValueError("is empty")
    return part_tuple


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Every setting of a run.

    Values are taken from the defaults, then from a key-value config
    file and finally from command line flags; later sources win. Keys
    of the config file are the field names, for instance
    ``tau=0.7`` or ``spatial_encoding=topo``. Angles are given in
    degrees.

    :raises: :class:`aerovln.stmr_utilities.RunConfigError` for
        unknown keys and invalid values.

    **Example:**

    >>> from aerovln import stmr_commands
    >>> config = stmr_commands.RunConfig.from_sources(override_dict={"tau": "0.7"})
    >>> config.tau, config.matrix_size
    (0.7, 20)
    """

    scene: str = stmr_commands.configurations.DEFAULT_SCENE
    episodes: tuple[str, ...] = (stmr_commands.configurations.DEFAULT_EPISODES,)
    backend: str = stmr_commands.configurations.DEFAULT_BACKEND
    perceptor: str = stmr_commands.configurations.DEFAULT_PERCEPTOR
    out: str = stmr_commands.configurations.DEFAULT_OUT
    parallelism: int = stmr_evaluations.configurations.DEFAULT_PARALLELISM
    seed: int = stmr_commands.configurations.DEFAULT_SEED
    tau: typing.Optional[float] = None
    cell_metric: typing.Optional[float] = None
    matrix_size: typing.Optional[int] = None
    voxel_size: typing.Optional[float] = None
    max_degree: typing.Optional[float] = None
    max_distance: typing.Optional[float] = None
    max_actions: typing.Optional[int] = None
    success_distance: typing.Optional[float] = None
    spatial_encoding: str = "stmr"
    plan_mode: str = "state"
    camera_tilt: typing.Optional[float] = None
    image_width: typing.Optional[int] = None
    image_height: typing.Optional[int] = None
    fov: typing.Optional[float] = None
    model: typing.Optional[str] = None
    temperature: typing.Optional[float] = None
    timeout: typing.Optional[float] = None
    max_attempts: typing.Optional[int] = None
    template: typing.Optional[str] = None

    _parser_dict: typing.ClassVar[dict[str, typing.Callable]] = dict(
        scene=_text,
        episodes=_text_tuple,
        backend=_text,
        perceptor=_text,
        out=_text,
        parallelism=_positive(int),
        seed=int,
        tau=float,
        cell_metric=_positive(_finite_float),
        matrix_size=int,
        voxel_size=_positive(_finite_float),
        max_degree=_positive(_finite_float),
        max_distance=_positive(_finite_float),
        max_actions=_positive(int),
        success_distance=_positive(_finite_float),
        spatial_encoding=_choice(
            stmr_evaluations.configurations.SPATIAL_ENCODING_TUPLE
        ),
        plan_mode=_choice(stmr_evaluations.configurations.PLAN_MODE_TUPLE),
        camera_tilt=_finite_float,
        image_width=_positive(int),
        image_height=_positive(int),
        fov=_positive(_finite_float),
        model=_text,
        temperature=_optional_float,
        timeout=_positive(_finite_float),
        max_attempts=_positive(int),
        template=_text,
    )

    def __post_init__(self):
        if self.tau is not None and not 0 < self.tau < 1:
            raise stmr_utilities.RunConfigError("tau", self.tau, "has to lie in (0, 1)")
        if self.matrix_size is not None and (
            self.matrix_size < 2 or self.matrix_size % 2
        ):
            raise stmr_utilities.RunConfigError(
                "matrix_size", self.matrix_size, "has to be even and >= 2"
            )
        if self.fov is not None and not self.fov < 180:
            raise stmr_utilities.RunConfigError("fov", self.fov, "has to be < 180")
        cell_metric = self.cell_metric or stmr_matrices.configurations.CELL_METRIC
        voxel_size = self.voxel_size or stmr_mapping.configurations.VOXEL_SIZE
        block_size = cell_metric / voxel_size
        if block_size < 1 or not math.isclose(block_size, round(block_size)):
            raise stmr_utilities.RunConfigError(
                "cell_metric",
                cell_metric,
                f"has to be a multiple of the voxel size {voxel_size}",
            )

    @classmethod
    def key_tuple(cls) -> tuple[str, ...]:
        return tuple(field.name for field in dataclasses.fields(cls))

    @classmethod
    def parse_value(cls, key: str, value: typing.Any) -> typing.Any:
        """Convert the text of a config file or a flag to the field type."""
        if key not in cls._parser_dict:
            raise stmr_utilities.RunConfigError(key, value, "unknown key")
        if not isinstance(value, str) and not (
            key == "episodes" and isinstance(value, (list, tuple))
        ):
            return value
        try:
            return cls._parser_dict[key](value)
        except ValueError as error:
            raise stmr_utilities.RunConfigError(key, value, str(error)) from error

    @classmethod
    def from_sources(
        cls,
        config_path: typing.Optional[str] = None,
        override_dict: typing.Optional[dict[str, typing.Any]] = None,
    ) -> RunConfig:
        """Merge defaults, a config file and overrides.

        :param config_path: Key-value file, one ``key=value`` per line.
        :param override_dict: Values of command line flags. ``None``
            values are ignored.
        :raises: :class:`FileNotFoundError` if the config file doesn't exist.
        """
        value_dict: dict[str, typing.Any] = {}
        if config_path is not None:
            if not os.path.isfile(config_path):
                raise FileNotFoundError(f"Config file '{config_path}' doesn't exist.")
            for key, value in dotenv.dotenv_values(config_path).items():
                value_dict[key] = cls.parse_value(key, value or "")
        for key, value in (override_dict or {}).items():
            if value is not None:
                value_dict[key] = cls.parse_value(key, value)
        return cls(**value_dict)

    def episode_settings(self) -> stmr_evaluations.EpisodeSettings:
        """The settings of the navigation loop."""
        return stmr_evaluations.EpisodeSettings(
            tau=self.tau,
            cell_metric=self.cell_metric,
            matrix_size=self.matrix_size,
            voxel_size=self.voxel_size,
            max_degree=self.max_degree,
            max_distance=self.max_distance,
            max_actions=self.max_actions,
            success_distance=self.success_distance,
            spatial_encoding=self.spatial_encoding,
            plan_mode=self.plan_mode,
            camera_tilt=(
                None if self.camera_tilt is None else math.radians(self.camera_tilt)
            ),
            image_width=self.image_width,
            image_height=self.image_height,
            fov=None if self.fov is None else math.radians(self.fov),
            template=self.template,
        )
