import unittest

from aerovln import stmr_evaluations
from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_planners

from ..worlds.episodes_tests import make_episode
from ..worlds.scenes_tests import make_scene

Action = stmr_parameters.Action
Pose = stmr_parameters.UavPose
StoppedBy = stmr_evaluations.StoppedBy
Verb = stmr_parameters.ActionVerb

UNPARSEABLE = "I am not sure where to go."


class SequenceBackend(stmr_planners.abc.LlmBackend):
    """Answer with the next response of a list, whatever the step is."""

    def __init__(self, *response):
        self.response_list = list(response)

    def complete(self, prompt: str, step: int = 0) -> str:
        return self.response_list.pop(0)


class EpisodeSettingsTest(unittest.TestCase):
    def test_defaults(self):
        settings = stmr_evaluations.EpisodeSettings()
        self.assertEqual(
            settings.matrix_size, stmr_matrices.configurations.MATRIX_SIZE
        )
        self.assertEqual(settings.template, "stmr_v1")
        self.assertIsNone(settings.max_actions)
        self.assertEqual(
            settings.success_distance,
            stmr_evaluations.configurations.SUCCESS_DISTANCE,
        )

    def test_template_follows_encoding(self):
        for encoding, template in (("topo", "topo_v1"), ("metric", "metric_v1")):
            with self.subTest(encoding=encoding):
                self.assertEqual(
                    stmr_evaluations.EpisodeSettings(
                        spatial_encoding=encoding
                    ).template,
                    template,
                )

    def test_explicit_values_win(self):
        settings = stmr_evaluations.EpisodeSettings(
            matrix_size=10, template="mine.txt", max_degree=45
        )
        self.assertEqual(settings.matrix_size, 10)
        self.assertEqual(settings.template, "mine.txt")
        self.assertTrue(settings.degree_range.contains(45))
        self.assertFalse(settings.degree_range.contains(46))

    def test_invalid(self):
        for kwargs in ({"spatial_encoding": "grid"}, {"plan_mode": "forget"}):
            with self.subTest(kwargs=kwargs):
                self.assertRaises(
                    ValueError, stmr_evaluations.EpisodeSettings, **kwargs
                )


class RunEpisodeTest(unittest.TestCase):
    def setUp(self):
        self.scene = make_scene()
        self.episode = make_episode()

    def run_episode(self, backend, **kwargs) -> stmr_evaluations.EpisodeResult:
        return stmr_evaluations.run_episode(
            self.scene,
            self.episode,
            backend,
            settings=stmr_evaluations.EpisodeSettings(**kwargs),
        )

    def test_ground_truth_script(self):
        result = self.run_episode(stmr_planners.GroundTruthBackend())
        self.assertIs(result.stopped_by, StoppedBy.STOP_ACTION)
        self.assertAlmostEqual(result.ne, 0)
        self.assertTrue(result.success)
        self.assertTrue(result.oracle_success)
        self.assertEqual(result.action_count, 2)
        self.assertEqual(result.step_count, 3)
        self.assertTrue(result.step_traces[-1].action.is_stop)
        self.assertIsNone(result.error)

    def test_traces(self):
        result = self.run_episode(stmr_planners.GroundTruthBackend())
        for step, trace in enumerate(result.step_traces):
            with self.subTest(step=step):
                self.assertEqual(trace.step, step)
                self.assertEqual(trace.pose, result.trajectory[step])
                self.assertEqual(len(trace.response_tuple), 1)
                self.assertIn(self.episode.instruction, trace.prompt)
                self.assertEqual(
                    len(trace.matrix.splitlines()),
                    stmr_matrices.configurations.MATRIX_SIZE + 1,
                )
                self.assertTrue(trace.map.startswith("stmr-map v1\n"))

    def test_deterministic(self):
        result_tuple = tuple(
            self.run_episode(stmr_planners.GroundTruthBackend()) for _ in range(2)
        )
        self.assertEqual(
            *(
                [
                    (trace.prompt, trace.matrix, trace.map, trace.response_tuple)
                    for trace in result.step_traces
                ]
                for result in result_tuple
            )
        )

    def test_other_encodings_and_plan_modes(self):
        for kwargs in (
            {"spatial_encoding": "topo"},
            {"spatial_encoding": "metric"},
            {"plan_mode": "regenerate"},
        ):
            with self.subTest(kwargs=kwargs):
                result = self.run_episode(
                    stmr_planners.GroundTruthBackend(), **kwargs
                )
                self.assertIs(result.stopped_by, StoppedBy.STOP_ACTION)
                self.assertTrue(result.success)

    def test_stop_far_from_goal(self):
        backend = stmr_planners.ScriptedBackend(
            [stmr_planners.format_response(Action("stop"))]
        )
        result = self.run_episode(backend)
        self.assertIs(result.stopped_by, StoppedBy.STOP_ACTION)
        self.assertEqual(result.ne, self.episode.start_to_goal_distance)
        self.assertFalse(result.success)
        self.assertEqual(result.trajectory, (self.episode.start,))

    def test_unparseable_answers_end_in_error(self):
        backend = stmr_planners.ScriptedBackend([UNPARSEABLE] * 5)
        with self.assertLogs(level="WARNING"):
            result = self.run_episode(backend)
        fallback_count = stmr_planners.configurations.MAX_CONSECUTIVE_FALLBACKS
        self.assertIs(result.stopped_by, StoppedBy.ERROR)
        self.assertEqual(
            result.error, f"{fallback_count} consecutive answers without valid action"
        )
        self.assertEqual(result.step_count, fallback_count)
        # every fallback but the last one hovers in place
        self.assertEqual(result.trajectory, (self.episode.start,) * fallback_count)
        for trace in result.step_traces:
            self.assertEqual(
                len(trace.response_tuple),
                stmr_planners.configurations.REQUERY_LIMIT + 1,
            )
            self.assertTrue(trace.note.startswith("fallback"))
        self.assertEqual(result.step_traces[0].action.distance, 0)
        self.assertIsNone(result.step_traces[-1].action)

    def test_requery_recovers(self):
        backend = SequenceBackend(
            UNPARSEABLE,
            "Action: (somersault), (0 degrees), (0 meters)",
            stmr_planners.format_response(Action("stop")),
        )
        with self.assertLogs(level="WARNING"):
            result = self.run_episode(backend)
        self.assertIs(result.stopped_by, StoppedBy.STOP_ACTION)
        self.assertEqual(len(result.step_traces[0].response_tuple), 3)

    def test_fallback_count_resets(self):
        stop = stmr_planners.format_response(Action("stop"))
        hover = stmr_planners.format_response(Action("straight", 0, 0))
        backend = stmr_planners.ScriptedBackend(
            [UNPARSEABLE, UNPARSEABLE, hover, UNPARSEABLE, UNPARSEABLE, stop]
        )
        with self.assertLogs(level="WARNING"):
            result = self.run_episode(backend)
        self.assertIs(result.stopped_by, StoppedBy.STOP_ACTION)
        self.assertEqual(result.action_count, 5)

    def test_exhausted_script(self):
        with self.assertLogs(level="ERROR"):
            result = self.run_episode(stmr_planners.ScriptedBackend())
        self.assertIs(result.stopped_by, StoppedBy.ERROR)
        self.assertTrue(result.error.startswith("ScriptExhaustedError: "))
        self.assertEqual(result.trajectory, (self.episode.start,))
        self.assertEqual(result.step_count, 0)

    def test_max_actions(self):
        result = self.run_episode(stmr_planners.EchoBackend(), max_actions=2)
        self.assertIs(result.stopped_by, StoppedBy.MAX_ACTIONS)
        self.assertEqual(result.stop_pose.position, (20, -10, 10))
        self.assertFalse(result.success)
        self.assertTrue(result.oracle_success)
        self.assertEqual(result.action_count, 2)

    def test_episode_max_actions(self):
        self.episode = make_episode(max_actions=1)
        result = self.run_episode(stmr_planners.EchoBackend())
        self.assertIs(result.stopped_by, StoppedBy.MAX_ACTIONS)
        self.assertLessEqual(len(result.trajectory), self.episode.max_actions + 1)

    def test_collision(self):
        start = Pose(2, 2.5, 10)
        self.episode = make_episode(
            start=start, goal=(30, 2.5, 30), ground_truth_path=[start]
        )
        result = self.run_episode(stmr_planners.EchoBackend(), max_actions=1)
        self.assertLess(result.stop_pose.x, 10)
        self.assertIn("collision", result.step_traces[0].note)


class NavigationAgentTest(unittest.TestCase):
    def test_shared_between_episodes(self):
        agent = stmr_evaluations.NavigationAgent(stmr_planners.GroundTruthBackend())
        scene = make_scene()
        result_list = [
            stmr_evaluations.run_episode(
                scene, make_episode(episode_id=f"e{index}"), None, agent=agent
            )
            for index in range(2)
        ]
        self.assertTrue(all(result.success for result in result_list))

    def test_repr(self):
        agent = stmr_evaluations.NavigationAgent(stmr_planners.EchoBackend())
        self.assertIn("stmr", repr(agent))


if __name__ == "__main__":
    unittest.main()
