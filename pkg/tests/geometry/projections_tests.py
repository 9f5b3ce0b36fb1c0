import math
import time
import unittest

import numpy as np

from aerovln import stmr_geometry
from aerovln import stmr_parameters
from aerovln import stmr_utilities


class BackprojectPixelTest(unittest.TestCase):
    def setUp(self):
        self.k = stmr_parameters.CameraIntrinsics(10, 10, 2, 2, 4, 4)

    def test_principal_point(self):
        self.assertEqual(stmr_geometry.backproject_pixel(2, 2, 7.0, self.k), (0, 0, 7))

    def test_offset_pixel(self):
        x, y, z = stmr_geometry.backproject_pixel(3, 0, 10, self.k)
        self.assertAlmostEqual(x, 1)
        self.assertAlmostEqual(y, -2)
        self.assertEqual(z, 10)

    def test_invalid_depth(self):
        for depth in (0, -1, math.nan, math.inf):
            with self.subTest(depth=depth):
                self.assertRaises(
                    stmr_utilities.InvalidDepthError,
                    stmr_geometry.backproject_pixel,
                    2,
                    2,
                    depth,
                    self.k,
                )

    def test_pixel_out_of_bounds(self):
        self.assertRaises(
            stmr_utilities.PixelOutOfBoundsError,
            stmr_geometry.backproject_pixel,
            4,
            0,
            1,
            self.k,
        )

    def test_project_point_inverts_backprojection(self):
        point = stmr_geometry.backproject_pixel(1, 3, 4, self.k)
        projected = stmr_geometry.project_point(point, self.k)
        for expected, value in zip((1, 3, 4), projected):
            self.assertAlmostEqual(expected, value)

    def test_numpy_depth(self):
        depth_array = np.array([[7.5]], dtype=np.float32)
        for depth in (depth_array[0, 0], np.float64(7.5), np.int64(7)):
            with self.subTest(depth=type(depth)):
                x, y, z = stmr_geometry.backproject_pixel(2, 2, depth, self.k)
                self.assertEqual((x, y), (0, 0))
                self.assertEqual(z, float(depth))
                self.assertIs(type(z), float)

    def test_random_round_trip(self):
        rng = np.random.default_rng(11)
        start = time.perf_counter()
        for _ in range(1000):
            width, height = (int(n) for n in rng.integers(16, 1921, size=2))
            k = stmr_parameters.CameraIntrinsics(
                rng.uniform(50, 2000),
                rng.uniform(50, 2000),
                rng.uniform(0, width),
                rng.uniform(0, height),
                width,
                height,
            )
            u, v = rng.uniform(0, width), rng.uniform(0, height)
            depth = rng.uniform(0.1, 500)
            projected = stmr_geometry.project_point(
                stmr_geometry.backproject_pixel(u, v, depth, k), k
            )
            for expected, value in zip((u, v, depth), projected):
                self.assertLessEqual(
                    abs(value - expected), 1e-9 * max(1, abs(expected))
                )
        self.assertLess(time.perf_counter() - start, 1)

    def test_project_point_behind_camera(self):
        self.assertRaises(
            stmr_utilities.InvalidDepthError,
            stmr_geometry.project_point,
            (0, 0, -1),
            self.k,
        )


class CameraToWorldTest(unittest.TestCase):
    def assertPointAlmostEqual(self, point, expected):
        for value, expected_value in zip(point, expected):
            self.assertAlmostEqual(value, expected_value)

    def test_forward_camera_faces_heading(self):
        pose = stmr_parameters.UavPose(0, 0, 10)
        self.assertPointAlmostEqual(
            stmr_geometry.camera_to_world((0, 0, 5), pose), (5, 0, 10)
        )
        north_pose = pose.replace(yaw=math.pi / 2)
        self.assertPointAlmostEqual(
            stmr_geometry.camera_to_world((0, 0, 5), north_pose), (0, 5, 10)
        )

    def test_image_right_and_down(self):
        pose = stmr_parameters.UavPose(0, 0, 10, yaw=math.pi / 2)
        self.assertPointAlmostEqual(
            stmr_geometry.camera_to_world((0.5, 0, 5), pose), (0.5, 5, 10)
        )
        self.assertPointAlmostEqual(
            stmr_geometry.camera_to_world((0, 0.5, 5), pose), (0, 5, 9.5)
        )

    def test_downward_mount(self):
        pose = stmr_parameters.UavPose(3, 4, 50)
        self.assertPointAlmostEqual(
            stmr_geometry.camera_to_world(
                (0, 0, 50), pose, stmr_geometry.downward_camera_mount()
            ),
            (3, 4, 0),
        )

    def test_translation(self):
        self.assertEqual(
            stmr_geometry.camera_to_world((0, 0, 0), stmr_parameters.UavPose(1, 2, 3)),
            (1, 2, 3),
        )

    def test_body_rotation_is_orthonormal(self):
        rotation = stmr_geometry.body_rotation(
            stmr_parameters.UavPose(0, 0, 0, pitch=0.2, roll=-0.1, yaw=2.5)
        )
        np.testing.assert_allclose(rotation @ rotation.T, np.eye(3), atol=1e-12)
        self.assertAlmostEqual(np.linalg.det(rotation), 1)


class BackprojectImageTest(unittest.TestCase):
    def setUp(self):
        self.k = stmr_parameters.CameraIntrinsics(10, 10, 2, 2, 4, 4)
        self.pose = stmr_parameters.UavPose(10, 20, 30, yaw=0.3)
        self.depth = np.full((4, 4), 5.0)
        self.depth[0, 0] = 0
        self.depth[1, 1] = 200
        self.depth[2, 2] = np.nan
        self.labels = np.arange(16).reshape(4, 4)

    def test_skips_invalid_depth(self):
        cloud = stmr_geometry.backproject_image(
            self.depth, self.labels, self.k, self.pose
        )
        self.assertEqual(len(cloud), 13)
        self.assertFalse({0, 5, 10} & cloud.label_set)

    def test_max_range(self):
        cloud = stmr_geometry.backproject_image(
            self.depth, self.labels, self.k, self.pose, max_range=500
        )
        self.assertEqual(len(cloud), 14)

    def test_matches_pixel_backprojection(self):
        cloud = stmr_geometry.backproject_image(
            self.depth, self.labels, self.k, self.pose
        )
        point_dict = {label: (x, y, z) for x, y, z, label in cloud}
        for v in range(4):
            for u in range(4):
                label = int(self.labels[v, u])
                if label not in point_dict:
                    continue
                expected = stmr_geometry.camera_to_world(
                    stmr_geometry.backproject_pixel(u, v, self.depth[v, u], self.k),
                    self.pose,
                )
                for value, expected_value in zip(point_dict[label], expected):
                    self.assertAlmostEqual(value, expected_value, places=9)

    def test_shape_mismatch(self):
        self.assertRaises(
            stmr_utilities.ImageShapeError,
            stmr_geometry.backproject_image,
            np.ones((3, 4)),
            np.ones((3, 4), dtype=int),
            self.k,
            self.pose,
        )


class SemanticPointCloudTest(unittest.TestCase):
    def test_mismatch(self):
        self.assertRaises(
            ValueError, stmr_geometry.SemanticPointCloud, np.zeros((2, 3)), [1]
        )

    def test_non_finite(self):
        self.assertRaises(
            ValueError,
            stmr_geometry.SemanticPointCloud,
            [(0, 0, math.inf)],
            [1],
        )

    def test_concatenate(self):
        a = stmr_geometry.SemanticPointCloud.from_point_sequence([(0, 0, 0, 1)])
        b = stmr_geometry.SemanticPointCloud.from_point_sequence([(1, 1, 1, 2)])
        self.assertEqual(list(a.concatenate(b)), [(0, 0, 0, 1), (1, 1, 1, 2)])

    def test_validate_labels(self):
        cloud = stmr_geometry.SemanticPointCloud.from_point_sequence(
            [(0, 0, 0, 1), (0, 0, 0, 7)]
        )
        cloud.validate_labels((1, 7))
        self.assertRaises(
            stmr_utilities.UnregisteredLabelError, cloud.validate_labels, (1,)
        )

    def test_empty(self):
        cloud = stmr_geometry.SemanticPointCloud.from_point_sequence([])
        self.assertEqual(len(cloud), 0)


if __name__ == "__main__":
    unittest.main()
