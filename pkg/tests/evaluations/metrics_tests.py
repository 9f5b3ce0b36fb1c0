import itertools
import unittest

import numpy as np

from aerovln import stmr_evaluations
from aerovln import stmr_parameters
from aerovln import stmr_utilities

Pose = stmr_parameters.UavPose
StoppedBy = stmr_evaluations.StoppedBy


def make_result(
    stop: tuple[float, float, float],
    stopped_by: StoppedBy = StoppedBy.STOP_ACTION,
    trajectory=None,
    episode_id: str = "e0",
) -> stmr_evaluations.EpisodeResult:
    """Result of a flight to the goal at the origin which stops at ``stop``."""
    if trajectory is None:
        trajectory = [Pose(*stop)]
    else:
        trajectory = list(trajectory) + [Pose(*stop)]
    return stmr_evaluations.EpisodeResult(episode_id, (0, 0, 0), trajectory, stopped_by)


class NavigationErrorTest(unittest.TestCase):
    def test_same_point(self):
        self.assertEqual(stmr_evaluations.navigation_error((1, 2, 3), (1, 2, 3)), 0)

    def test_axis(self):
        self.assertEqual(stmr_evaluations.navigation_error((20, 0, 5), (0, 0, 5)), 20)

    def test_three_dimensional(self):
        self.assertEqual(stmr_evaluations.navigation_error((3, 4, 12), (0, 0, 0)), 13)

    def test_pose(self):
        self.assertEqual(
            stmr_evaluations.navigation_error(Pose(3, 4, 12, yaw=1), (0, 0, 0)), 13
        )

    def test_metric_properties(self):
        rng = np.random.default_rng(3)
        point_list = [tuple(point) for point in rng.uniform(-100, 100, (6, 3))]
        distance = stmr_evaluations.navigation_error
        for a, b, c in itertools.permutations(point_list, 3):
            self.assertEqual(distance(a, b), distance(b, a))
            self.assertLessEqual(distance(a, c), distance(a, b) + distance(b, c) + 1e-9)


class SuccessTest(unittest.TestCase):
    def test_close_stop(self):
        self.assertTrue(make_result((19.9, 0, 0)).success)

    def test_threshold_is_strict(self):
        self.assertFalse(make_result((20, 0, 0)).success)

    def test_needs_stop_action(self):
        for stopped_by in (StoppedBy.MAX_ACTIONS, StoppedBy.ERROR):
            with self.subTest(stopped_by=stopped_by):
                self.assertFalse(make_result((5, 0, 0), stopped_by).success)

    def test_success_distance(self):
        result = make_result((19.9, 0, 0))
        self.assertFalse(stmr_evaluations.success(result, 10))
        self.assertTrue(stmr_evaluations.success(make_result((9, 0, 0)), 10))


class OracleSuccessTest(unittest.TestCase):
    def test_passes_goal_between_poses(self):
        trajectory = [Pose(-50, 10, 0), Pose(50, 10, 0)]
        self.assertTrue(stmr_evaluations.oracle_success(trajectory, (0, 0, 0)))
        # no end point is inside the success ball
        self.assertFalse(
            stmr_evaluations.oracle_success(trajectory[:1], (0, 0, 0))
        )

    def test_far_away(self):
        trajectory = [Pose(-50, 30, 0), Pose(50, 30, 0), Pose(50, 80, 0)]
        self.assertFalse(stmr_evaluations.oracle_success(trajectory, (0, 0, 0)))

    def test_segment_end_is_closest(self):
        trajectory = [Pose(100, 0, 0), Pose(30, 0, 0)]
        self.assertFalse(stmr_evaluations.oracle_success(trajectory, (0, 0, 0)))
        self.assertTrue(stmr_evaluations.oracle_success(trajectory, (0, 0, 0), 31))

    def test_hovering(self):
        trajectory = [Pose(10, 0, 0), Pose(10, 0, 0)]
        self.assertTrue(stmr_evaluations.oracle_success(trajectory, (0, 0, 0)))

    def test_success_implies_oracle_success(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            point_array = rng.uniform(-40, 40, (4, 3))
            result = make_result(
                tuple(point_array[-1]),
                trajectory=[Pose(*point) for point in point_array[:-1]],
            )
            if result.success:
                self.assertTrue(result.oracle_success)


class AggregateTest(unittest.TestCase):
    def test_rates(self):
        result_list = (
            [make_result((5, 0, 0))] * 4
            + [make_result((30, 0, 0), trajectory=[Pose(0, 10, 0)])] * 3
            + [make_result((30, 0, 0), StoppedBy.MAX_ACTIONS)] * 3
        )
        summary = stmr_evaluations.aggregate(result_list)
        self.assertEqual(summary.episode_count, 10)
        self.assertAlmostEqual(summary.navigation_error, (4 * 5 + 6 * 30) / 10)
        self.assertAlmostEqual(summary.success_rate, 40)
        self.assertAlmostEqual(summary.oracle_success_rate, 70)

    def test_single_perfect_run(self):
        summary = stmr_evaluations.aggregate([make_result((0, 0, 0))])
        self.assertEqual(summary, stmr_evaluations.Summary(1, 0, 100, 100))

    def test_generator(self):
        summary = stmr_evaluations.aggregate(
            make_result((x, 0, 0)) for x in (0, 10, 50)
        )
        self.assertAlmostEqual(summary.navigation_error, 20)
        self.assertAlmostEqual(summary.success_rate, 200 / 3)

    def test_empty(self):
        self.assertRaises(
            stmr_utilities.EmptyResultSetError, stmr_evaluations.aggregate, []
        )


if __name__ == "__main__":
    unittest.main()
