# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""The ``aerovln-stmr`` command: run suites, inspect traces, check files.

Exit status ``0`` means success, ``1`` a data error (unreadable or
inconsistent files) and ``2`` a usage error (bad flags, bad config
values, a trace step which doesn't exist).
"""

from __future__ import annotations

import argparse
import logging
import os
import pathlib
import sys
import typing

import dotenv

from aerovln import stmr_commands
from aerovln import stmr_configurations
from aerovln import stmr_converters
from aerovln import stmr_evaluations
from aerovln import stmr_planners
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = (
    "cmd_run",
    "cmd_dump_map",
    "cmd_validate",
    "cmd_export_fixtures",
    "build_parser",
    "main",
)

_DATA_ERROR_TUPLE = (OSError, stmr_utilities.DocumentParseError, ValueError)


def _print_error(message: str):
    print(f"{stmr_commands.configurations.PROGRAM_NAME}: {message}", file=sys.stderr)


def cmd_run(
    config: stmr_commands.RunConfig,
    show_progress: bool = False,
    stdout: typing.Optional[typing.TextIO] = None,
) -> int:
    """Fly all episodes of a config and write results and traces.

    The CSV table goes to ``<out>/results.csv``, the human readable
    summary to ``<out>/summary.txt`` and to standard output, the step
    traces to ``<out>/<episode id>/step_<n>/``.
    """
    configurations = stmr_commands.configurations
    stdout = stdout or sys.stdout
    try:
        settings = config.episode_settings()
        perceptor = stmr_commands.build_perceptor(config.perceptor, config.seed)
    except stmr_utilities.RunConfigError as error:
        _print_error(str(error))
        return configurations.EXIT_USAGE_ERROR
    except ValueError as error:
        _print_error(str(error))
        return configurations.EXIT_USAGE_ERROR
    try:
        scene = stmr_commands.load_scene_source(config.scene)
        episodes = stmr_commands.load_episode_sources(config.episodes)
        backend = stmr_commands.build_backend(config.backend, config, episodes)
    except stmr_utilities.RunConfigError as error:
        _print_error(str(error))
        return configurations.EXIT_USAGE_ERROR
    except _DATA_ERROR_TUPLE as error:
        _print_error(str(error))
        return configurations.EXIT_DATA_ERROR
    violation_list = [
        f"{episode.episode_id}: {violation}"
        for episode in episodes
        for violation in episode.violation_tuple(scene)
    ]
    if violation_list:
        for violation in violation_list:
            _print_error(violation)
        return configurations.EXIT_DATA_ERROR

    agent = stmr_evaluations.NavigationAgent(backend, perceptor, settings)
    out = pathlib.Path(config.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        result_tuple = stmr_evaluations.run_suite(
            scene,
            episodes,
            agent,
            config.parallelism,
            out,
            show_progress,
        )
        stmr_evaluations.write_results_csv(
            result_tuple, out / configurations.RESULTS_FILE_NAME
        )
        summary_text = stmr_evaluations.format_summary(
            {settings.spatial_encoding: stmr_evaluations.aggregate(result_tuple)}
        )
        (out / configurations.SUMMARY_FILE_NAME).write_text(
            summary_text + "\n", encoding="utf-8"
        )
    except OSError as error:
        _print_error(str(error))
        return configurations.EXIT_DATA_ERROR
    print(summary_text, file=stdout)
    return configurations.EXIT_SUCCESS


def cmd_dump_map(
    trace: str,
    step: int,
    format: str = "ascii",
    output: typing.Optional[str] = None,
    stdout: typing.Optional[typing.TextIO] = None,
) -> int:
    """Show the matrix and the top-down map of one traced step.

    :param trace: Trace directory of one episode.
    :param step: The step.
    :param format: ``ascii`` prints the matrix text and an ASCII map
        with ``@`` at the UAV cell, ``pgm`` writes a portable graymap.
    :param output: File for the rendering. Standard output if ``None``.
    """
    configurations = stmr_commands.configurations
    stdout = stdout or sys.stdout
    try:
        trace_step = stmr_evaluations.load_trace_step(trace, step)
    except stmr_utilities.TraceError as error:
        _print_error(str(error))
        return configurations.EXIT_USAGE_ERROR
    except _DATA_ERROR_TUPLE as error:
        _print_error(str(error))
        return configurations.EXIT_DATA_ERROR
    match format:
        case "pgm":
            text = stmr_converters.TopDownMapToPgm()(trace_step.map, trace_step.pose)
        case _:
            text = (
                trace_step.matrix
                + "\n\n"
                + stmr_converters.TopDownMapToAscii()(trace_step.map, trace_step.pose)
                + "\n"
            )
    if output is None:
        stdout.write(text)
    else:
        try:
            pathlib.Path(output).write_text(text, encoding="utf-8")
        except OSError as error:
            _print_error(str(error))
            return configurations.EXIT_DATA_ERROR
    return configurations.EXIT_SUCCESS


def _document_kind(text: str) -> typing.Optional[str]:
    comment_prefix = stmr_converters.configurations.COMMENT_PREFIX
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith(comment_prefix):
            return {
                stmr_converters.configurations.SCENE_HEADER: "scene",
                stmr_converters.configurations.EPISODE_HEADER: "episode",
            }.get(line)
    return None


def cmd_validate(
    paths: typing.Sequence[str],
    scene: typing.Optional[str] = None,
    stdout: typing.Optional[typing.TextIO] = None,
) -> int:
    """Check scene and episode documents and list every violation.

    :param paths: Scene and episode documents.
    :param scene: Scene source which episodes are checked against.
        Without it episodes are checked against a scene of ``paths``
        with their scene name, or against the only scene of ``paths``.
    :return: ``0`` if there isn't any violation.
    """
    configurations = stmr_commands.configurations
    stdout = stdout or sys.stdout
    violation_list: list[str] = []
    scene_dict: dict[str, stmr_worlds.Scene] = {}
    episode_list: list[tuple[str, stmr_worlds.Episode]] = []
    for path in paths:
        try:
            text = pathlib.Path(path).read_text(encoding="utf-8")
        except OSError as error:
            violation_list.append(f"{path}: {error}")
            continue
        match _document_kind(text):
            case "scene":
                try:
                    document_scene = stmr_converters.TextToScene()(text)
                except stmr_utilities.DocumentParseError as error:
                    violation_list.append(f"{path}: {error}")
                else:
                    scene_dict[document_scene.name or path] = document_scene
            case "episode":
                try:
                    episode_list.append((path, stmr_converters.TextToEpisode()(text)))
                except stmr_utilities.DocumentParseError as error:
                    violation_list.append(f"{path}: {error}")
            case _:
                violation_list.append(f"{path}: unknown document header")
    reference_scene = None
    if scene is not None:
        try:
            reference_scene = stmr_commands.load_scene_source(scene)
        except _DATA_ERROR_TUPLE as error:
            violation_list.append(f"{scene}: {error}")
    for path, episode in episode_list:
        episode_scene = reference_scene or scene_dict.get(episode.scene_name)
        if episode_scene is None and len(scene_dict) == 1:
            episode_scene = next(iter(scene_dict.values()))
        if episode_scene is not None:
            violation_list.extend(
                f"{path}: {violation}"
                for violation in episode.violation_tuple(episode_scene)
            )
    for violation in violation_list:
        print(violation, file=stdout)
    count = len(violation_list)
    print(f"{count} violation{'' if count == 1 else 's'}", file=stdout)
    return configurations.EXIT_SUCCESS if not count else configurations.EXIT_DATA_ERROR


def cmd_export_fixtures(
    out: str,
    count: typing.Optional[int] = None,
    stdout: typing.Optional[typing.TextIO] = None,
) -> int:
    """Write the bundled scene, its episode suite and ground truth scripts.

    The result can be run with ``run --scene <out>/riverside.scene.txt
    --episodes <out>/episodes --backend scripted:<out>/scripts``.
    """
    configurations = stmr_commands.configurations
    stdout = stdout or sys.stdout
    scene = stmr_worlds.riverside_scene()
    episode_tuple = stmr_worlds.builtin_suite(scene, count)
    out_path = pathlib.Path(out)
    episode_directory = out_path / configurations.EPISODE_DIRECTORY_NAME
    script_directory = out_path / configurations.SCRIPT_DIRECTORY_NAME
    ground_truth_backend = stmr_planners.GroundTruthBackend()
    delimiter = f"\n{stmr_planners.configurations.SCRIPT_DELIMITER}\n"
    try:
        episode_directory.mkdir(parents=True, exist_ok=True)
        script_directory.mkdir(parents=True, exist_ok=True)
        stmr_converters.dump_scene(scene, out_path / configurations.SCENE_FILE_NAME)
        for episode in episode_tuple:
            stmr_converters.dump_episode(
                episode,
                episode_directory
                / f"{episode.episode_id}{configurations.EPISODE_FILE_SUFFIX}",
            )
            script = ground_truth_backend.for_episode(episode, scene)
            (script_directory / f"{episode.episode_id}.txt").write_text(
                delimiter.join(script.response_tuple) + "\n", encoding="utf-8"
            )
    except OSError as error:
        _print_error(str(error))
        return configurations.EXIT_DATA_ERROR
    print(
        f"Wrote 1 scene and {len(episode_tuple)} episodes to '{out_path}'.",
        file=stdout,
    )
    return configurations.EXIT_SUCCESS


def build_parser() -> argparse.ArgumentParser:
    configurations = stmr_commands.configurations
    parser = argparse.ArgumentParser(
        prog=configurations.PROGRAM_NAME,
        description="Zero-shot aerial navigation with matrix map prompts.",
    )
    parser.add_argument(
        "--log-level",
        choices=configurations.LOG_LEVEL_TUPLE,
        default="WARNING",
        help="Logging level of all components (default: WARNING).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="Fly a suite of episodes.")
    run_parser.add_argument("--config", help="Key-value file with run settings.")
    run_parser.add_argument("--scene", help="Scene document or builtin:riverside.")
    run_parser.add_argument(
        "--episodes",
        nargs="+",
        help="Episode documents, directories, globs or builtin:suite[:N].",
    )
    run_parser.add_argument(
        "--backend",
        help=(
            "echo | random | sampling | scripted:ground-truth | "
            "scripted:<path> | remote:<endpoint>"
        ),
    )
    run_parser.add_argument("--perceptor", help="oracle | degraded:<rate>[:<seed>]")
    run_parser.add_argument("--out", help="Directory of results and traces.")
    run_parser.add_argument("--parallel", dest="parallelism", help="Parallel episodes.")
    run_parser.add_argument("--seed", help="Seed of random components.")
    run_parser.add_argument(
        "--set",
        dest="assignment_list",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Override any config key, for instance --set spatial_encoding=topo.",
    )
    run_parser.add_argument(
        "--progress", action="store_true", help="Show a progress bar on stderr."
    )

    dump_parser = subparsers.add_parser(
        "dump-map", help="Show matrix and map of a traced step."
    )
    dump_parser.add_argument("--trace", required=True, help="Episode trace directory.")
    dump_parser.add_argument("--step", required=True, type=int)
    dump_parser.add_argument("--format", choices=("ascii", "pgm"), default="ascii")
    dump_parser.add_argument("--output", help="Write to this file instead of stdout.")

    validate_parser = subparsers.add_parser(
        "validate", help="Check scene and episode documents."
    )
    validate_parser.add_argument("paths", nargs="+")
    validate_parser.add_argument(
        "--scene", help="Scene which the episodes are checked against."
    )

    export_parser = subparsers.add_parser(
        "export-fixtures", help="Write the bundled scene and episode suite."
    )
    export_parser.add_argument("--out", required=True)
    export_parser.add_argument("--count", type=int)
    return parser


def _run_config(arguments: argparse.Namespace) -> stmr_commands.RunConfig:
    override_dict: dict[str, typing.Any] = {
        key: getattr(arguments, key)
        for key in (
            "scene",
            "episodes",
            "backend",
            "perceptor",
            "out",
            "parallelism",
            "seed",
        )
    }
    for assignment in arguments.assignment_list:
        key, separator, value = assignment.partition("=")
        if not separator:
            raise stmr_utilities.RunConfigError(
                assignment, "", "expected KEY=VALUE"
            )
        override_dict[key.strip()] = value.strip()
    return stmr_commands.RunConfig.from_sources(arguments.config, override_dict)


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Entry point of the ``aerovln-stmr`` command."""
    configurations = stmr_commands.configurations
    arguments = build_parser().parse_args(argv)
    level = getattr(logging, arguments.log_level)
    stmr_configurations.LOGGING_LEVEL = level
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    # Tokens of remote backends may live in a '.env' file.
    dotenv.load_dotenv(os.path.join(os.getcwd(), ".env"))
    match arguments.command:
        case "run":
            try:
                config = _run_config(arguments)
            except stmr_utilities.RunConfigError as error:
                _print_error(str(error))
                return configurations.EXIT_USAGE_ERROR
            except OSError as error:
                _print_error(str(error))
                return configurations.EXIT_USAGE_ERROR
            return cmd_run(config, arguments.progress)
        case "dump-map":
            return cmd_dump_map(
                arguments.trace, arguments.step, arguments.format, arguments.output
            )
        case "validate":
            return cmd_validate(arguments.paths, arguments.scene)
        case "export-fixtures":
            return cmd_export_fixtures(arguments.out, arguments.count)
    return configurations.EXIT_USAGE_ERROR
