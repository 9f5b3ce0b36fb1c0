import math
import unittest

from aerovln import stmr_parameters
from aerovln import stmr_utilities
from aerovln import stmr_worlds

from .scenes_tests import make_scene


def make_episode(**kwargs) -> stmr_worlds.Episode:
    start = stmr_parameters.UavPose(0, -10, 10)
    argument_dict = dict(
        episode_id="test-000",
        instruction="Fly east  along the road\nand stop.",
        start=start,
        goal=(20, -10, 10),
        ground_truth_path=[
            start,
            start.replace(x=10),
            start.replace(x=20),
        ],
    )
    argument_dict.update(kwargs)
    return stmr_worlds.Episode(**argument_dict)


class EpisodeTest(unittest.TestCase):
    def test_normalizes_instruction(self):
        self.assertEqual(
            make_episode().instruction, "Fly east along the road and stop."
        )

    def test_default_max_actions(self):
        self.assertEqual(
            make_episode().max_actions,
            stmr_worlds.configurations.DEFAULT_MAX_ACTIONS,
        )

    def test_path_length(self):
        episode = make_episode()
        self.assertEqual(episode.path_length, 20)
        self.assertEqual(episode.start_to_goal_distance, 20)

    def test_invalid(self):
        for field, kwargs in (
            ("id", {"episode_id": "a b"}),
            ("id", {"episode_id": ""}),
            ("instruction", {"instruction": "  "}),
            ("goal", {"goal": (0, math.nan, 0)}),
            ("path", {"ground_truth_path": []}),
            ("path", {"ground_truth_path": [stmr_parameters.UavPose(1, 1, 1)]}),
            ("max_actions", {"max_actions": 0}),
        ):
            with self.subTest(field=field, kwargs=kwargs):
                with self.assertRaises(stmr_utilities.EpisodeParseError) as context:
                    make_episode(**kwargs)
                self.assertEqual(context.exception.field, field)

    def test_equality(self):
        self.assertEqual(make_episode(), make_episode())
        self.assertNotEqual(make_episode(), make_episode(max_actions=3))

    def test_no_violation(self):
        self.assertEqual(make_episode().violation_tuple(make_scene()), ())

    def test_violations(self):
        start = stmr_parameters.UavPose(12, 3, 10)
        episode = make_episode(
            start=start,
            goal=(80, 0, 10),
            ground_truth_path=[start, start.replace(x=60)],
        )
        violation_tuple = episode.violation_tuple(make_scene())
        self.assertEqual(len(violation_tuple), 3)
        self.assertTrue(violation_tuple[0].startswith("start:"))
        self.assertTrue(violation_tuple[1].startswith("goal:"))
        self.assertTrue(violation_tuple[2].startswith("path pose 1:"))


class ActionsBetweenTest(unittest.TestCase):
    def summary(self, pose0, pose1):
        return [
            (action.verb.value, round(action.degree, 6), round(action.distance, 6))
            for action in stmr_worlds.actions_between(pose0, pose1)
        ]

    def test_straight(self):
        self.assertEqual(
            self.summary(
                stmr_parameters.UavPose(0, 0, 5), stmr_parameters.UavPose(25, 0, 5)
            ),
            [("straight", 0, 10), ("straight", 0, 10), ("straight", 0, 5)],
        )

    def test_turn_and_fly(self):
        self.assertEqual(
            self.summary(
                stmr_parameters.UavPose(0, 0, 5),
                stmr_parameters.UavPose(0, 10, 5, yaw=math.pi / 2),
            ),
            [("left", 15, 0)] * 6 + [("straight", 0, 10)],
        )

    def test_climb_first_descend_last(self):
        self.assertEqual(
            self.summary(
                stmr_parameters.UavPose(0, 0, 5), stmr_parameters.UavPose(10, 0, 25)
            ),
            [("lift", 0, 10), ("lift", 0, 10), ("straight", 0, 10)],
        )
        self.assertEqual(
            self.summary(
                stmr_parameters.UavPose(0, 0, 25),
                stmr_parameters.UavPose(0, 0, 5, yaw=-math.pi / 2),
            ),
            [("down", 0, 10), ("down", 0, 10)] + [("right", 15, 0)] * 6,
        )

    def test_same_pose(self):
        pose = stmr_parameters.UavPose(1, 2, 3)
        self.assertEqual(stmr_worlds.actions_between(pose, pose), ())


class GroundTruthActionsTest(unittest.TestCase):
    def test_ends_with_stop(self):
        action_tuple = stmr_worlds.ground_truth_actions(make_episode())
        self.assertEqual(
            [action.verb.value for action in action_tuple],
            ["straight", "straight", "stop"],
        )

    def test_replay_reaches_goal(self):
        scene = stmr_worlds.riverside_scene()
        for episode in stmr_worlds.builtin_suite(scene, 3):
            with self.subTest(episode=episode.episode_id):
                pose = episode.start
                for action in stmr_worlds.ground_truth_actions(episode):
                    pose, collided = stmr_worlds.apply_action(scene, pose, action)
                    self.assertFalse(collided)
                self.assertLess(pose.distance_to(episode.goal), 0.01)


if __name__ == "__main__":
    unittest.main()
