import math
import os
import pathlib
import re
import tempfile
import unittest

from aerovln import stmr_converters
from aerovln import stmr_evaluations
from aerovln import stmr_matrices
from aerovln import stmr_planners
from aerovln import stmr_worlds

from ..worlds.episodes_tests import make_episode
from ..worlds.scenes_tests import make_scene


class RunSuiteTest(unittest.TestCase):
    def setUp(self):
        self.scene = make_scene()
        self.episode_tuple = tuple(
            make_episode(episode_id=f"test-{index:03d}") for index in range(4)
        )
        self.agent = stmr_evaluations.NavigationAgent(
            stmr_planners.GroundTruthBackend()
        )

    def test_order_independent_of_parallelism(self):
        for parallelism in (1, 3):
            with self.subTest(parallelism=parallelism):
                result_tuple = stmr_evaluations.run_suite(
                    self.scene, self.episode_tuple, self.agent, parallelism
                )
                self.assertEqual(
                    [result.episode_id for result in result_tuple],
                    [episode.episode_id for episode in self.episode_tuple],
                )
                self.assertTrue(all(result.success for result in result_tuple))

    def test_parallel_runs_are_identical(self):
        result_tuple_tuple = tuple(
            stmr_evaluations.run_suite(
                self.scene, self.episode_tuple, self.agent, parallelism
            )
            for parallelism in (1, 4)
        )
        self.assertEqual(
            *(
                [
                    [trace.prompt for trace in result.step_traces]
                    for result in result_tuple
                ]
                for result_tuple in result_tuple_tuple
            )
        )

    def test_traces(self):
        with tempfile.TemporaryDirectory() as directory:
            stmr_evaluations.run_suite(
                self.scene, self.episode_tuple[:2], self.agent, 2, directory
            )
            self.assertEqual(sorted(os.listdir(directory)), ["test-000", "test-001"])
            self.assertEqual(
                stmr_evaluations.trace_step_count(os.path.join(directory, "test-000")),
                3,
            )

    def test_empty(self):
        self.assertEqual(stmr_evaluations.run_suite(self.scene, (), self.agent), ())

    def test_invalid_parallelism(self):
        self.assertRaises(
            ValueError,
            stmr_evaluations.run_suite,
            self.scene,
            self.episode_tuple,
            self.agent,
            0,
        )


class BuiltinSuiteTest(unittest.TestCase):
    def test_ground_truth_succeeds(self):
        scene = stmr_worlds.riverside_scene()
        episode_tuple = stmr_worlds.builtin_suite(scene, 2)
        result_tuple = stmr_evaluations.run_suite(
            scene,
            episode_tuple,
            stmr_evaluations.NavigationAgent(stmr_planners.GroundTruthBackend()),
            parallelism=2,
        )
        summary = stmr_evaluations.aggregate(result_tuple)
        self.assertEqual(summary.success_rate, 100)
        self.assertEqual(summary.oracle_success_rate, 100)
        self.assertLess(summary.navigation_error, 1)


COMPASS_PATTERN = "|".join(stmr_matrices.configurations.COMPASS_NAME_TUPLE)
SECTOR_PATTERN = "|".join(stmr_converters.configurations.SECTOR_NAME_TUPLE)
MAP_LINE_PATTERN_DICT = {
    "topo": re.compile(
        r"Place \d+: .+\.|Place \d+ is connected with Places? \d+(, \d+)*\."
        r"|You are at Place \d+\."
    ),
    "metric": re.compile(
        rf"an? .+ in the ({SECTOR_PATTERN}) \d+ meters away|no landmarks in sight"
    ),
}


def run_fixture_suite(
    backend, episode_tuple, spatial_encoding="stmr", trace_directory=None
):
    return stmr_evaluations.run_suite(
        FixtureSuiteTest.scene,
        episode_tuple,
        stmr_evaluations.NavigationAgent(
            backend,
            settings=stmr_evaluations.EpisodeSettings(
                spatial_encoding=spatial_encoding
            ),
        ),
        parallelism=4,
        trace_directory=trace_directory,
    )


class FixtureSuiteTest(unittest.TestCase):
    scene = stmr_worlds.riverside_scene()

    @classmethod
    def setUpClass(cls):
        cls.episode_tuple = stmr_worlds.builtin_suite(cls.scene)
        cls.result_tuple = run_fixture_suite(
            stmr_planners.GroundTruthBackend(), cls.episode_tuple
        )

    def test_ground_truth_agent(self):
        summary = stmr_evaluations.aggregate(self.result_tuple)
        self.assertEqual(summary.episode_count, 10)
        self.assertEqual(summary.success_rate, 100)
        self.assertEqual(summary.oracle_success_rate, 100)
        self.assertLess(summary.navigation_error, 5)

    def test_random_agent(self):
        result_tuple = run_fixture_suite(
            stmr_planners.RandomBackend(seed=0), self.episode_tuple
        )
        summary = stmr_evaluations.aggregate(result_tuple)
        self.assertLessEqual(summary.success_rate, 10)
        self.assertGreaterEqual(summary.oracle_success_rate, summary.success_rate)

    def test_matrix_of_every_step(self):
        size = stmr_matrices.configurations.MATRIX_SIZE
        legend_line = stmr_converters.LegendToText()(self.scene.legend)
        allowed_set = {str(label) for label in self.scene.legend} | {"0", "-1"}
        for result in self.result_tuple:
            for trace in result.step_traces:
                with self.subTest(episode=result.episode_id, step=trace.step):
                    line_list = trace.matrix.split("\n")
                    self.assertEqual(len(line_list), size + 1)
                    self.assertEqual(line_list[0], legend_line)
                    row_list = [line.split(" ") for line in line_list[1:]]
                    self.assertTrue(all(len(row) == size for row in row_list))
                    center = row_list[size // 2][size // 2]
                    self.assertRegex(center, rf"^({COMPASS_PATTERN})-?\d+$")
                    self.assertEqual(
                        center, stmr_matrices.orientation_token(trace.pose)
                    )
                    row_list[size // 2][size // 2] = "-1"
                    self.assertTrue(
                        {value for row in row_list for value in row} <= allowed_set
                    )

    def test_rotation_only_changes_the_center_token(self):
        trace = self.result_tuple[0].step_traces[-1]
        matrix = stmr_converters.TextToStmrMatrix()(trace.matrix)
        for yaw in (0, math.pi / 2, math.pi, 3 * math.pi / 2):
            rotated = stmr_converters.StmrMatrixToText()(
                matrix, trace.pose.replace(yaw=yaw)
            )
            with self.subTest(yaw=yaw):
                difference_list = [
                    (index, a, b)
                    for index, (a, b) in enumerate(
                        zip(trace.matrix.split(), rotated.split())
                    )
                    if a != b
                ]
                self.assertLessEqual(len(difference_list), 1)
                self.assertEqual(len(trace.matrix.split()), len(rotated.split()))
                for _, _, token in difference_list:
                    self.assertRegex(token, rf"^({COMPASS_PATTERN})-?\d+$")

    def test_prompts_of_every_encoding(self):
        episode_tuple = self.episode_tuple[:2]
        for encoding in ("stmr", "topo", "metric"):
            with self.subTest(encoding=encoding):
                prompt_list_tuple = tuple(
                    [
                        trace.prompt
                        for result in run_fixture_suite(
                            stmr_planners.GroundTruthBackend(),
                            episode_tuple,
                            encoding,
                        )
                        for trace in result.step_traces
                    ]
                    for _ in range(2)
                )
                # byte-stable across runs
                self.assertEqual(*prompt_list_tuple)
                for prompt in prompt_list_tuple[0]:
                    self.assert_prompt_layout(prompt, encoding)

    def assert_prompt_layout(self, prompt: str, encoding: str):
        self.assertTrue(prompt.startswith("[Task Description]\n"))
        self.assertTrue(prompt.endswith("\n"))
        head, _, rest = prompt.partition("\nInstruction: ")
        self.assertIn("Action: (right, left, lift, down, straight", head)
        _, _, rest = rest.partition("\nHistory: [")
        _, _, rest = rest.partition("]\nMap:\n")
        map_text, _, plan_text = rest.partition("\nPlan:\n")
        self.assertRegex(
            plan_text, r"^(\d+\. \((Completed|In Process|TODO)\) [^\n]+\n)+$"
        )
        line_list = map_text.split("\n")
        if encoding == "stmr":
            self.assertEqual(
                len(line_list), stmr_matrices.configurations.MATRIX_SIZE + 1
            )
        else:
            for line in line_list:
                self.assertRegex(line, MAP_LINE_PATTERN_DICT[encoding])

    def test_trace_directories_are_byte_identical(self):
        episode_tuple = self.episode_tuple[:2]
        with tempfile.TemporaryDirectory() as directory:
            path_tuple = tuple(
                pathlib.Path(directory, name) for name in ("first", "second")
            )
            for path in path_tuple:
                run_fixture_suite(
                    stmr_planners.GroundTruthBackend(),
                    episode_tuple,
                    trace_directory=path,
                )
            file_list_tuple = tuple(
                sorted(p.relative_to(path) for p in path.rglob("*") if p.is_file())
                for path in path_tuple
            )
            self.assertEqual(*file_list_tuple)
            self.assertTrue(file_list_tuple[0])
            for relative_path in file_list_tuple[0]:
                self.assertEqual(
                    (path_tuple[0] / relative_path).read_bytes(),
                    (path_tuple[1] / relative_path).read_bytes(),
                )


if __name__ == "__main__":
    unittest.main()
