import unittest

from aerovln import stmr_evaluations
from aerovln import stmr_parameters

Pose = stmr_parameters.UavPose
StoppedBy = stmr_evaluations.StoppedBy


class StoppedByTest(unittest.TestCase):
    def test_values(self):
        self.assertEqual(
            [stopped_by.value for stopped_by in StoppedBy],
            ["stop-action", "max-actions", "error"],
        )


class EpisodeResultTest(unittest.TestCase):
    def setUp(self):
        self.trajectory = [Pose(0, 0, 5), Pose(10, 0, 5), Pose(20, 0, 5)]
        self.result = stmr_evaluations.EpisodeResult(
            "e7", (25, 0, 5), self.trajectory, StoppedBy.STOP_ACTION
        )

    def test_metrics(self):
        self.assertEqual(self.result.ne, 5)
        self.assertTrue(self.result.success)
        self.assertTrue(self.result.oracle_success)

    def test_counts(self):
        self.assertEqual(self.result.stop_pose, Pose(20, 0, 5))
        self.assertEqual(self.result.action_count, 2)
        self.assertEqual(self.result.step_count, 0)

    def test_goal_is_float_tuple(self):
        self.assertEqual(self.result.goal, (25.0, 0.0, 5.0))
        self.assertIsInstance(self.result.trajectory, tuple)

    def test_success_distance(self):
        result = stmr_evaluations.EpisodeResult(
            "e7",
            (25, 0, 5),
            self.trajectory,
            StoppedBy.STOP_ACTION,
            success_distance=4,
        )
        self.assertFalse(result.success)
        self.assertFalse(result.oracle_success)

    def test_error(self):
        result = stmr_evaluations.EpisodeResult(
            "e7", (0, 0, 5), self.trajectory[:1], StoppedBy.ERROR, error="boom"
        )
        self.assertEqual(result.error, "boom")
        self.assertFalse(result.success)
        self.assertTrue(result.oracle_success)

    def test_empty_trajectory(self):
        self.assertRaises(
            ValueError,
            stmr_evaluations.EpisodeResult,
            "e7",
            (0, 0, 0),
            [],
            StoppedBy.ERROR,
        )

    def test_repr(self):
        self.assertIn("e7, stop-action, ne=5.00", repr(self.result))


if __name__ == "__main__":
    unittest.main()
