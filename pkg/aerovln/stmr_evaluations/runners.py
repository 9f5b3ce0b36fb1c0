# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Fly one episode: perceive, map, prompt and act until the UAV stops."""

from __future__ import annotations

import dataclasses
import typing

import numpy as np
import ranges

from aerovln import stmr_converters
from aerovln import stmr_evaluations
from aerovln import stmr_geometry
from aerovln import stmr_mapping
from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_perception
from aerovln import stmr_planners
from aerovln import stmr_plans
from aerovln import stmr_utilities
from aerovln import stmr_worlds

__all__ = ("EpisodeSettings", "NavigationAgent", "run_episode")


@dataclasses.dataclass
class EpisodeSettings:
    """Every tunable value of an episode run.

    Fields which are ``None`` get the value of the configuration
    constant of the package they belong to.
    """

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
    max_range: typing.Optional[float] = None
    requery_limit: typing.Optional[int] = None
    max_consecutive_fallbacks: typing.Optional[int] = None
    collision_margin: typing.Optional[float] = None
    template: typing.Optional[str] = None

    def __post_init__(self):
        geometry = stmr_geometry.configurations
        default_dict = dict(
            tau=stmr_perception.configurations.SIMILARITY_THRESHOLD,
            cell_metric=stmr_matrices.configurations.CELL_METRIC,
            matrix_size=stmr_matrices.configurations.MATRIX_SIZE,
            voxel_size=stmr_mapping.configurations.VOXEL_SIZE,
            max_degree=stmr_parameters.configurations.DEGREE_RANGE.end,
            max_distance=stmr_parameters.configurations.DISTANCE_RANGE.end,
            success_distance=stmr_evaluations.configurations.SUCCESS_DISTANCE,
            camera_tilt=geometry.DEFAULT_CAMERA_TILT,
            image_width=geometry.DEFAULT_IMAGE_WIDTH,
            image_height=geometry.DEFAULT_IMAGE_HEIGHT,
            fov=geometry.DEFAULT_HORIZONTAL_FOV,
            max_range=geometry.MAX_RANGE,
            requery_limit=stmr_planners.configurations.REQUERY_LIMIT,
            max_consecutive_fallbacks=(
                stmr_planners.configurations.MAX_CONSECUTIVE_FALLBACKS
            ),
            collision_margin=stmr_worlds.configurations.COLLISION_MARGIN,
            template=stmr_planners.configurations.SPATIAL_ENCODING_TO_TEMPLATE_NAME.get(
                self.spatial_encoding
            ),
        )
        for name, default in default_dict.items():
            if getattr(self, name) is None:
                setattr(self, name, default)
        configurations = stmr_evaluations.configurations
        if self.spatial_encoding not in configurations.SPATIAL_ENCODING_TUPLE:
            raise ValueError(f"Unknown spatial encoding '{self.spatial_encoding}'.")
        if self.plan_mode not in configurations.PLAN_MODE_TUPLE:
            raise ValueError(f"Unknown plan mode '{self.plan_mode}'.")

    @property
    def degree_range(self) -> ranges.Range:
        return ranges.Range(0, self.max_degree, include_end=True)

    @property
    def distance_range(self) -> ranges.Range:
        return ranges.Range(0, self.max_distance, include_end=True)

    @property
    def intrinsics(self) -> stmr_parameters.CameraIntrinsics:
        return stmr_parameters.CameraIntrinsics.from_field_of_view(
            self.image_width, self.image_height, self.fov
        )

    @property
    def mount(self) -> np.ndarray:
        return stmr_geometry.forward_camera_mount(self.camera_tilt)


class _Answer(typing.NamedTuple):
    response_tuple: tuple[str, ...]
    response: typing.Optional[stmr_converters.LlmResponse]


class NavigationAgent(stmr_utilities.StmrObject):
    """The zero-shot navigation loop.

    :param backend: Answers the planner prompts.
    :param perceptor: Finds the masks of each view. Defaults to an
        :class:`aerovln.stmr_perception.OraclePerceptor`.
    :param settings: Tunable values of the run.
    :param decomposer: Splits the instruction into sub-goals. Defaults
        to a :class:`aerovln.stmr_plans.RuleBasedDecomposer`.
    :param landmark_extractor: Finds the landmarks of the instruction
        and of each sub-goal. Defaults to a
        :class:`aerovln.stmr_perception.RuleBasedLandmarkExtractor`.

    One agent may run several episodes at the same time: all state of
    an episode lives inside :meth:`run`.
    """

    def __init__(
        self,
        backend: stmr_planners.abc.LlmBackend,
        perceptor: typing.Optional[stmr_perception.abc.Perceptor] = None,
        settings: typing.Optional[EpisodeSettings] = None,
        decomposer: typing.Optional[stmr_plans.abc.InstructionDecomposer] = None,
        landmark_extractor: typing.Optional[
            stmr_perception.abc.LandmarkExtractor
        ] = None,
    ):
        self.backend = backend
        self.perceptor = perceptor or stmr_perception.OraclePerceptor()
        self.settings = settings or EpisodeSettings()
        self.decomposer = decomposer
        self.landmark_extractor = (
            landmark_extractor or stmr_perception.RuleBasedLandmarkExtractor()
        )

    def __repr_content__(self) -> str:
        return f"{self.backend}, {self.settings.spatial_encoding}"

    # ###################################################################### #
    #                          one step                                      #
    # ###################################################################### #

    def _ask(
        self,
        backend: stmr_planners.abc.LlmBackend,
        bundle: stmr_planners.PromptBundle,
        step: int,
    ) -> _Answer:
        settings = self.settings
        response_list = []
        for attempt in range(settings.requery_limit + 1):
            raw = stmr_planners.query(backend, bundle, step)
            response_list.append(raw)
            try:
                response = stmr_converters.parse_response(
                    raw, settings.degree_range, settings.distance_range
                )
            except (
                stmr_utilities.UnparseableResponseError,
                stmr_utilities.ActionParseError,
            ) as error:
                self._logger.warning(
                    f"Step {step}, answer {attempt + 1}: {error} Asking again."
                )
                continue
            return _Answer(tuple(response_list), response)
        return _Answer(tuple(response_list), None)

    def _insert_masks(
        self,
        grid: stmr_mapping.VoxelGrid,
        mask_tuple: tuple[stmr_perception.PerceivedMask, ...],
        view: stmr_perception.SceneView,
    ):
        for mask in mask_tuple:
            cloud = stmr_geometry.backproject_image(
                np.where(mask.mask, view.depth, 0.0),
                np.where(mask.mask, mask.label, 0),
                view.intrinsics,
                view.pose,
                view.mount,
                self.settings.max_range,
            )
            grid.insert_points(cloud)

    def _map_text(
        self,
        matrix: stmr_matrices.StmrMatrix,
        mask_tuple: tuple[stmr_perception.PerceivedMask, ...],
        view: stmr_perception.SceneView,
        place_graph: stmr_matrices.PlaceGraph,
    ) -> str:
        match self.settings.spatial_encoding:
            case "topo":
                place_graph.visit(
                    view.pose,
                    sorted(
                        {mask.matched_landmark or mask.caption for mask in mask_tuple}
                    ),
                )
                return stmr_converters.encode_topo(place_graph)
            case "metric":
                return stmr_converters.encode_metric(
                    stmr_perception.observe_landmarks(
                        mask_tuple, view, self.settings.max_range
                    )
                )
            case _:
                return stmr_converters.serialize_matrix(matrix, view.pose)

    # ###################################################################### #
    #                          episode                                       #
    # ###################################################################### #

    def _plan_updater(self, instruction: str) -> stmr_plans.abc.PlanUpdater:
        if self.settings.plan_mode == "regenerate":
            return stmr_plans.RegeneratingPlanUpdater(
                instruction, self.decomposer, self.landmark_extractor, self.settings.tau
            )
        return stmr_plans.StatePlanUpdater(self.settings.tau)

    def run(
        self, scene: stmr_worlds.Scene, episode: stmr_worlds.Episode
    ) -> stmr_evaluations.EpisodeResult:
        """Fly an episode until the UAV stops, runs out of actions or fails.

        Errors of any component end the episode with
        :attr:`aerovln.stmr_evaluations.StoppedBy.ERROR`; they are
        logged, but never raised.
        """
        trajectory = [episode.start]
        step_trace_list: list[stmr_evaluations.StepTrace] = []
        stopped_by = stmr_evaluations.StoppedBy.MAX_ACTIONS
        error_message = None
        self._logger.info(f"Start episode '{episode.episode_id}'.")
        try:
            stopped_by, error_message = self._run(
                scene, episode, trajectory, step_trace_list
            )
        except Exception as error:
            stopped_by = stmr_evaluations.StoppedBy.ERROR
            error_message = f"{type(error).__name__}: {error}"
            self._logger.error(
                f"Episode '{episode.episode_id}' failed: {error_message}"
            )
        result = stmr_evaluations.EpisodeResult(
            episode.episode_id,
            episode.goal,
            trajectory,
            stopped_by,
            step_trace_list,
            error_message,
            self.settings.success_distance,
        )
        self._logger.info(f"End episode: {result}.")
        return result

    def _run(
        self,
        scene: stmr_worlds.Scene,
        episode: stmr_worlds.Episode,
        trajectory: list[stmr_parameters.UavPose],
        step_trace_list: list[stmr_evaluations.StepTrace],
    ) -> tuple[stmr_evaluations.StoppedBy, typing.Optional[str]]:
        settings = self.settings
        legend = scene.legend
        intrinsics, mount = settings.intrinsics, settings.mount
        backend = self.backend.for_episode(episode, scene)
        plan = stmr_plans.decompose_instruction(
            episode.instruction, self.decomposer, self.landmark_extractor
        )
        plan_updater = self._plan_updater(episode.instruction)
        instruction_landmarks = stmr_perception.extract_landmarks(
            episode.instruction, self.landmark_extractor
        )
        grid = stmr_mapping.VoxelGrid(settings.voxel_size, legend)
        top_down_map = stmr_mapping.TopDownMap(settings.voxel_size)
        top_down_map.mark_waypoint(episode.start)
        place_graph = stmr_matrices.PlaceGraph(settings.cell_metric)
        reconciler = stmr_planners.PlanReconciler()
        map_to_text = stmr_converters.TopDownMapToText()
        history: list[stmr_planners.HistoryEntry] = []
        fallback_count = 0
        pose = episode.start

        max_actions = settings.max_actions
        if max_actions is None:
            max_actions = episode.max_actions
        for step in range(max_actions):
            depth, semantic = stmr_worlds.render(
                scene, pose, intrinsics, mount, settings.max_range
            )
            view = stmr_perception.SceneView(
                depth, semantic, pose, intrinsics, legend, step, mount
            )
            mask_tuple = stmr_perception.filter_masks(
                stmr_perception.perceive(self.perceptor, view),
                instruction_landmarks,
                settings.tau,
                legend,
            )
            self._insert_masks(grid, mask_tuple, view)
            subgoal_labels = stmr_plans.current_subgoal_labels(
                plan, legend, settings.tau
            )
            top_down_map = stmr_mapping.project_top_down(
                grid, subgoal_labels, top_down_map
            )
            window = stmr_matrices.extract_local_window(
                top_down_map, pose, settings.matrix_size, settings.cell_metric
            )
            matrix = stmr_matrices.pool_to_matrix(
                window,
                legend,
                stmr_matrices.orientation_token(pose),
                subgoal_labels,
                settings.cell_metric,
            )
            plan = plan_updater.update(plan, matrix, pose)
            bundle = stmr_planners.build_prompt(
                plan,
                history,
                self._map_text(matrix, mask_tuple, view, place_graph),
                episode.instruction,
                legend,
                settings.template,
                settings.matrix_size,
                settings.cell_metric,
                settings.degree_range,
                settings.distance_range,
            )
            answer = self._ask(backend, bundle, step)

            def add_trace(action, note=None):
                step_trace_list.append(
                    stmr_evaluations.StepTrace(
                        step,
                        pose,
                        bundle.text,
                        answer.response_tuple,
                        action,
                        stmr_converters.serialize_matrix(matrix, pose),
                        map_to_text(top_down_map),
                        note,
                    )
                )

            if answer.response is None:
                fallback_count += 1
                note = (
                    f"fallback: no valid action in {len(answer.response_tuple)} "
                    "answers"
                )
                if fallback_count >= settings.max_consecutive_fallbacks:
                    add_trace(None, note)
                    return (
                        stmr_evaluations.StoppedBy.ERROR,
                        f"{fallback_count} consecutive answers without valid action",
                    )
                self._logger.warning(f"Step {step}: {note}, hovering.")
                action = stmr_parameters.Action.hover(note=note)
            else:
                fallback_count = 0
                action = answer.response.action
                note = action.note
                reconciler.reconcile(plan, answer.response.plan_block)

            if action.is_stop:
                add_trace(action, note)
                return stmr_evaluations.StoppedBy.STOP_ACTION, None

            motion = stmr_worlds.apply_action(
                scene, pose, action, settings.collision_margin
            )
            if motion.collided:
                self._logger.info(f"Step {step}: collision, stopped at {motion.pose}.")
                note = "; ".join(filter(None, (note, "collision")))
            add_trace(action, note)
            previous_pose, pose = pose, motion.pose
            trajectory.append(pose)
            history.append(
                stmr_planners.HistoryEntry.from_action(action, motion.collided)
            )
            top_down_map.mark_waypoint(pose, previous_pose)

        return stmr_evaluations.StoppedBy.MAX_ACTIONS, None


def run_episode(
    scene: stmr_worlds.Scene,
    episode: stmr_worlds.Episode,
    backend: stmr_planners.abc.LlmBackend,
    perceptor: typing.Optional[stmr_perception.abc.Perceptor] = None,
    settings: typing.Optional[EpisodeSettings] = None,
    agent: typing.Optional[NavigationAgent] = None,
) -> stmr_evaluations.EpisodeResult:
    """Fly one episode, see :class:`NavigationAgent`.

    :param agent: If given, ``backend``, ``perceptor`` and ``settings``
        are ignored and the agent flies the episode.
    """
    if agent is None:
        agent = NavigationAgent(backend, perceptor, settings)
    return agent.run(scene, episode)
