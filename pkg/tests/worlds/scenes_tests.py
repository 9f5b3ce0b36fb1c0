import math
import unittest

import numpy as np

from aerovln import stmr_constants
from aerovln import stmr_geometry
from aerovln import stmr_parameters
from aerovln import stmr_utilities
from aerovln import stmr_worlds

ROAD, BUILDING, TREE = 1, 2, 3


def make_scene(**kwargs) -> stmr_worlds.Scene:
    """20 x 20 cells of 5 meters around the origin with one building."""
    height = np.zeros((20, 20))
    label = np.full((20, 20), ROAD)
    # cell (i=12, j=10) covers x in [10, 15) and y in [0, 5)
    height[10, 12] = 20
    label[10, 12] = BUILDING
    canopy_bottom = np.zeros((20, 20))
    canopy_top = np.zeros((20, 20))
    canopy_label = np.zeros((20, 20), dtype=int)
    # cell (i=5, j=5) covers x in [-25, -20) and y in [-25, -20)
    canopy_bottom[5, 5], canopy_top[5, 5], canopy_label[5, 5] = 3, 10, TREE
    return stmr_worlds.Scene(
        5,
        height,
        label,
        {ROAD: "road", BUILDING: "building", TREE: "tree"},
        origin=(-50, -50),
        canopy_bottom=canopy_bottom,
        canopy_top=canopy_top,
        canopy_label=canopy_label,
        name="test",
        **kwargs,
    )


class SceneTest(unittest.TestCase):
    def setUp(self):
        self.scene = make_scene()

    def test_bounds(self):
        self.assertEqual(self.scene.bounds, (-50, -50, 50, 50))
        self.assertEqual(self.scene.shape, (20, 20))

    def test_cell_index(self):
        self.assertEqual(self.scene.cell_index(12, 3), (12, 10))
        self.assertEqual(self.scene.cell_index(-50, -50), (0, 0))
        self.assertEqual(self.scene.cell_index(-0.1, 0), (9, 10))

    def test_contains(self):
        self.assertTrue(self.scene.contains(-50, -50))
        self.assertFalse(self.scene.contains(50, 0))

    def test_is_free(self):
        self.assertFalse(self.scene.is_free(12, 3, 19))
        self.assertTrue(self.scene.is_free(12, 3, 21))
        self.assertFalse(self.scene.is_free(-22, -22, 5))
        self.assertTrue(self.scene.is_free(-22, -22, 2))
        self.assertFalse(self.scene.is_free(0, 0, 201))

    def test_visible_label(self):
        self.assertEqual(self.scene.visible_label_at(5, 5), TREE)
        self.assertEqual(self.scene.visible_label_at(12, 10), BUILDING)

    def test_category_id(self):
        self.assertEqual(self.scene.category_id(" Building"), BUILDING)
        self.assertIsNone(self.scene.category_id("river"))

    def test_immutable(self):
        with self.assertRaises(ValueError):
            self.scene.height[0, 0] = 1

    def test_validate_pose(self):
        self.scene.validate_pose(stmr_parameters.UavPose(0, 0, 10))
        for pose in (
            stmr_parameters.UavPose(60, 0, 10),
            stmr_parameters.UavPose(12, 3, 10),
        ):
            with self.subTest(pose=pose):
                self.assertRaises(
                    stmr_utilities.PoseOutOfBoundsError,
                    self.scene.validate_pose,
                    pose,
                )

    def test_equality(self):
        self.assertEqual(self.scene, make_scene())
        self.assertNotEqual(self.scene, make_scene(ceiling=300))


class SceneValidationTest(unittest.TestCase):
    def assertSceneError(self, field, *args, **kwargs):
        with self.assertRaises(stmr_utilities.SceneParseError) as context:
            stmr_worlds.Scene(*args, **kwargs)
        self.assertEqual(context.exception.field, field)

    def test_shape_mismatch(self):
        self.assertSceneError(
            "label", 5, np.zeros((2, 2)), np.ones((2, 3), dtype=int), {1: "road"}
        )

    def test_unknown_label(self):
        self.assertSceneError(
            "label", 5, np.zeros((2, 2)), np.full((2, 2), 4), {1: "road"}
        )

    def test_reserved_label(self):
        self.assertSceneError(
            "legend",
            5,
            np.zeros((2, 2)),
            np.ones((2, 2), dtype=int),
            {1: "road", stmr_constants.UNEXPLORED: "nothing"},
        )

    def test_negative_height(self):
        self.assertSceneError(
            "height", 5, np.full((2, 2), -1.0), np.ones((2, 2), dtype=int), {1: "road"}
        )

    def test_cell_size(self):
        self.assertSceneError(
            "cell_size", 0, np.zeros((2, 2)), np.ones((2, 2), dtype=int), {1: "road"}
        )

    def test_ceiling(self):
        self.assertSceneError(
            "ceiling",
            5,
            np.full((2, 2), 50.0),
            np.ones((2, 2), dtype=int),
            {1: "road"},
            ceiling=40,
        )

    def test_incomplete_canopy(self):
        self.assertSceneError(
            "canopy_label",
            5,
            np.zeros((2, 2)),
            np.ones((2, 2), dtype=int),
            {1: "road"},
            canopy_bottom=np.zeros((2, 2)),
        )


class TraverseCellsTest(unittest.TestCase):
    def test_diagonal(self):
        scene = make_scene()
        cell_list = [
            (i, j) for i, j, *_ in stmr_worlds.traverse_cells(scene, 1, 2, 1, 1, 8)
        ]
        self.assertEqual(cell_list[:3], [(10, 10), (10, 11), (11, 11)])

    def test_parameters_are_contiguous(self):
        scene = make_scene()
        cell_list = list(stmr_worlds.traverse_cells(scene, 0.3, -7.1, -0.6, 0.8))
        for (*_, t_out), (_, _, t_in, _) in zip(cell_list, cell_list[1:]):
            self.assertEqual(t_out, t_in)
        self.assertEqual(cell_list[0][2], 0)


class CastRayTest(unittest.TestCase):
    def setUp(self):
        self.scene = make_scene()

    def test_ground(self):
        t, label = stmr_worlds.cast_ray(self.scene, (0, -10, 50), (0, 0, -1))
        self.assertAlmostEqual(t, 50)
        self.assertEqual(label, ROAD)

    def test_building_roof(self):
        t, label = stmr_worlds.cast_ray(self.scene, (12, 3, 50), (0, 0, -2))
        self.assertAlmostEqual(t, 15)
        self.assertEqual(label, BUILDING)

    def test_building_wall(self):
        t, label = stmr_worlds.cast_ray(self.scene, (2, 3, 10), (1, 0, 0))
        self.assertAlmostEqual(t, 8)
        self.assertEqual(label, BUILDING)

    def test_canopy_from_above_and_below(self):
        self.assertEqual(
            stmr_worlds.cast_ray(self.scene, (-22, -22, 50), (0, 0, -1)), (40, TREE)
        )
        self.assertEqual(
            stmr_worlds.cast_ray(self.scene, (-22, -22, 1), (0, 0, 1)), (2, TREE)
        )

    def test_no_hit(self):
        self.assertEqual(
            stmr_worlds.cast_ray(self.scene, (0, -10, 50), (0, 0, 1)),
            (0, stmr_constants.UNEXPLORED),
        )
        self.assertEqual(
            stmr_worlds.cast_ray(self.scene, (0, -10, 50), (0, 0, -1), 20),
            (0, stmr_constants.UNEXPLORED),
        )


class RenderTest(unittest.TestCase):
    def setUp(self):
        self.scene = make_scene()
        self.k = stmr_parameters.CameraIntrinsics.from_field_of_view(
            8, 6, math.radians(90)
        )

    def test_downward_flat_ground(self):
        pose = stmr_parameters.UavPose(-30, 30, 10)
        depth, semantic = stmr_worlds.render(
            self.scene, pose, self.k, stmr_geometry.downward_camera_mount()
        )
        np.testing.assert_allclose(depth, 10)
        self.assertTrue(np.all(semantic == ROAD))

    def test_backprojection_recovers_surface(self):
        pose = stmr_parameters.UavPose(0, -10, 30, yaw=0.4)
        mount = stmr_geometry.forward_camera_mount(math.radians(45))
        depth, semantic = stmr_worlds.render(self.scene, pose, self.k, mount)
        cloud = stmr_geometry.backproject_image(depth, semantic, self.k, pose, mount)
        self.assertGreater(len(cloud), 0)
        for x, y, z, label in cloud:
            if label == ROAD:
                self.assertAlmostEqual(z, 0, places=6)
            elif label == BUILDING:
                self.assertLessEqual(z, 20 + 1e-6)

    def test_invalid_pose(self):
        self.assertRaises(
            stmr_utilities.PoseOutOfBoundsError,
            stmr_worlds.render,
            self.scene,
            stmr_parameters.UavPose(12, 3, 5),
            self.k,
        )


class ApplyActionTest(unittest.TestCase):
    def setUp(self):
        self.scene = make_scene()

    def apply(self, pose, *action):
        return stmr_worlds.apply_action(
            self.scene, pose, stmr_parameters.Action(*action)
        )

    def test_free_flight(self):
        result = self.apply(stmr_parameters.UavPose(0, -10, 10), "straight", 0, 10)
        self.assertFalse(result.collided)
        self.assertEqual(result.pose.position, (10, -10, 10))

    def test_back(self):
        result = self.apply(stmr_parameters.UavPose(0, -10, 10), "back", 0, 5)
        self.assertEqual(result.pose.position, (-5, -10, 10))

    def test_turn_then_move(self):
        result = self.apply(stmr_parameters.UavPose(0, -10, 10), "left", 15, 10)
        self.assertAlmostEqual(result.pose.yaw, math.radians(15))
        self.assertAlmostEqual(result.pose.x, 10 * math.cos(math.radians(15)))
        self.assertAlmostEqual(result.pose.y, -10 + 10 * math.sin(math.radians(15)))

    def test_right_turn_wraps(self):
        result = self.apply(stmr_parameters.UavPose(0, -10, 10), "right", 15, 0)
        self.assertAlmostEqual(result.pose.yaw, math.radians(345))
        self.assertEqual(result.pose.position, (0, -10, 10))

    def test_building_collision(self):
        result = self.apply(stmr_parameters.UavPose(2, 3, 10), "straight", 0, 10)
        self.assertTrue(result.collided)
        self.assertAlmostEqual(result.pose.x, 9.5)

    def test_border_collision(self):
        result = self.apply(stmr_parameters.UavPose(45, -10, 10), "straight", 0, 10)
        self.assertTrue(result.collided)
        self.assertAlmostEqual(result.pose.x, 49.5)

    def test_ceiling_and_ground(self):
        lifted = self.apply(stmr_parameters.UavPose(0, -10, 195), "lift", 0, 10)
        self.assertTrue(lifted.collided)
        self.assertAlmostEqual(lifted.pose.z, 199.5)
        lowered = self.apply(stmr_parameters.UavPose(0, -10, 3), "down", 0, 10)
        self.assertTrue(lowered.collided)
        self.assertAlmostEqual(lowered.pose.z, 0.5)

    def test_lift_to_the_ceiling(self):
        pose = stmr_parameters.UavPose(0, -10, 190)
        result = self.apply(pose, "lift", 0, 10)
        self.assertFalse(result.collided)
        self.assertEqual(result.pose.z, self.scene.ceiling)
        self.assertIsNone(self.scene.pose_violation(result.pose))
        blocked = self.apply(result.pose, "lift", 0, 5)
        self.assertTrue(blocked.collided)
        self.assertEqual(blocked.pose.z, self.scene.ceiling)

    def test_canopy_blocks_lift(self):
        result = self.apply(stmr_parameters.UavPose(-22, -22, 1), "lift", 0, 10)
        self.assertTrue(result.collided)
        self.assertAlmostEqual(result.pose.z, 2.5)

    def test_stop(self):
        pose = stmr_parameters.UavPose(0, -10, 10)
        self.assertEqual(self.apply(pose, "stop"), (pose, False))

    def test_custom_margin(self):
        result = stmr_worlds.apply_action(
            self.scene,
            stmr_parameters.UavPose(2, 3, 10),
            stmr_parameters.Action("straight", 0, 10),
            margin=2,
        )
        self.assertAlmostEqual(result.pose.x, 6)


if __name__ == "__main__":
    unittest.main()
