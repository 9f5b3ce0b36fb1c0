import math
import unittest

from aerovln import stmr_constants
from aerovln import stmr_mapping
from aerovln import stmr_matrices
from aerovln import stmr_parameters


class ExtractLocalWindowTest(unittest.TestCase):
    def setUp(self):
        self.map = stmr_mapping.TopDownMap(
            5, {(0, 0): 3, (-10, 10): 1, (9, -9): 2, (10, 0): 4, (0, -10): 4}
        )
        self.pose = stmr_parameters.UavPose(2, 2, 10)

    def test_ranges(self):
        window = stmr_matrices.extract_local_window(self.map, self.pose)
        self.assertEqual(window.x_range, (-50, 50))
        self.assertEqual(window.y_range, (-45, 55))
        self.assertEqual(window.label_array.shape, (20, 20))
        self.assertEqual(window.block_size, 1)

    def test_north_first(self):
        window = stmr_matrices.extract_local_window(self.map, self.pose)
        self.assertEqual(window.label_array[10, 10], 3)
        self.assertEqual(window.label_array[0, 0], 1)
        self.assertEqual(window.label_array[19, 19], 2)
        # east and south borders lie outside
        self.assertNotIn(4, window.label_array)

    def test_anchored_at_world_origin(self):
        window = stmr_matrices.extract_local_window(
            self.map, stmr_parameters.UavPose(4.9, -0.1, 10)
        )
        self.assertEqual(window.x_range, (-50, 50))
        self.assertEqual(window.y_range, (-50, 50))
        self.assertEqual(window.label_array[10, 10], stmr_constants.UNEXPLORED)
        self.assertEqual(window.label_array[9, 10], 3)

    def test_block_size(self):
        fine_map = stmr_mapping.TopDownMap(2.5, {(0, 0): 1})
        window = stmr_matrices.extract_local_window(
            fine_map, self.pose, matrix_size=4, cell_metric=5
        )
        self.assertEqual(window.block_size, 2)
        self.assertEqual(window.label_array.shape, (8, 8))

    def test_trajectory_layer(self):
        self.map.mark_waypoint(self.pose)
        window = stmr_matrices.extract_local_window(self.map, self.pose)
        self.assertTrue(window.trajectory_array[10, 10])
        self.assertEqual(int(window.trajectory_array.sum()), 1)

    def test_invalid(self):
        for kwargs in (
            {"matrix_size": 5},
            {"matrix_size": 0},
            {"cell_metric": 7},
            {"cell_metric": 2.5},
        ):
            with self.subTest(kwargs=kwargs):
                self.assertRaises(
                    ValueError,
                    stmr_matrices.extract_local_window,
                    self.map,
                    self.pose,
                    **kwargs,
                )


class OrientationTokenTest(unittest.TestCase):
    def token(self, yaw_degree, pitch_degree=0):
        return stmr_matrices.orientation_token(
            stmr_parameters.UavPose(
                0, 0, 0, pitch=math.radians(pitch_degree), yaw=math.radians(yaw_degree)
            )
        )

    def test_compass(self):
        for yaw_degree, name in (
            (0, "east"),
            (90, "north"),
            (180, "west"),
            (270, "south"),
            (45, "northeast"),
            (135, "northwest"),
            (225, "southwest"),
            (315, "southeast"),
            (350, "east"),
        ):
            with self.subTest(yaw_degree=yaw_degree):
                self.assertEqual(self.token(yaw_degree), f"{name}0")

    def test_sector_borders(self):
        self.assertEqual(self.token(22.4), "east0")
        self.assertEqual(self.token(22.6), "northeast0")

    def test_pitch(self):
        self.assertEqual(self.token(0, -10), "east-10")
        self.assertEqual(self.token(0, 4.6), "east5")


if __name__ == "__main__":
    unittest.main()
