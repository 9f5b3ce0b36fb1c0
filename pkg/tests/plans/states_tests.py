import itertools
import unittest

from aerovln import stmr_perception
from aerovln import stmr_plans
from aerovln import stmr_utilities

Status = stmr_plans.SubGoalStatus


def make_plan(*text_and_landmarks) -> stmr_plans.PlanState:
    """Plan from ``(text, landmark, ...)`` tuples."""
    return stmr_plans.PlanState.from_text_sequence(
        [text for text, *_ in text_and_landmarks],
        [
            stmr_perception.LandmarkSet(landmarks)
            for _, *landmarks in text_and_landmarks
        ],
    )


class SubGoalStatusTest(unittest.TestCase):
    def test_from_any(self):
        self.assertIs(Status.from_any("In Process"), Status.IN_PROCESS)
        self.assertIs(Status.from_any("  COMPLETED"), Status.COMPLETED)
        self.assertIs(Status.from_any("todo"), Status.TODO)
        self.assertIs(Status.from_any(Status.TODO), Status.TODO)

    def test_unknown(self):
        self.assertRaises(stmr_utilities.CannotParseError, Status.from_any, "done")
        self.assertRaises(stmr_utilities.CannotParseError, Status.from_any, 1)


class PlanStateTest(unittest.TestCase):
    def setUp(self):
        self.plan = make_plan(("lift off",), ("fly to the road", "road"), ("land",))

    def test_fresh(self):
        self.assertEqual(
            self.plan.status_tuple, (Status.IN_PROCESS, Status.TODO, Status.TODO)
        )
        self.assertEqual(self.plan.pointer, 0)
        self.assertEqual(self.plan.current.text, "lift off")
        self.assertFalse(self.plan.is_exhausted)

    def test_complete_until(self):
        plan = self.plan.complete_until(1)
        self.assertEqual(
            plan.status_tuple, (Status.COMPLETED, Status.COMPLETED, Status.IN_PROCESS)
        )
        self.assertEqual(plan.text_tuple, self.plan.text_tuple)
        self.assertEqual(plan.completed_count, 2)
        # completed sub-goals stay completed
        self.assertIs(plan.complete_until(0), plan)

    def test_exhausted(self):
        plan = self.plan.complete_until(2)
        self.assertTrue(plan.is_exhausted)
        self.assertIsNone(plan.current)
        self.assertEqual(plan.pointer, 3)
        self.assertIs(plan.complete_current(), plan)

    def test_complete_current(self):
        self.assertEqual(self.plan.complete_current(), self.plan.complete_until(0))

    def test_invalid_statuses(self):
        landmarks = stmr_perception.LandmarkSet()
        for status_tuple in (
            (Status.TODO, Status.IN_PROCESS),
            (Status.IN_PROCESS, Status.IN_PROCESS),
            (Status.COMPLETED, Status.TODO),
            (Status.IN_PROCESS, Status.COMPLETED),
        ):
            with self.subTest(status_tuple=status_tuple):
                self.assertRaises(
                    ValueError,
                    stmr_plans.PlanState,
                    [
                        stmr_plans.SubGoal(0, "a", landmarks, status)
                        for status in status_tuple
                    ],
                )

    def test_empty_plan_is_exhausted(self):
        self.assertTrue(stmr_plans.PlanState([]).is_exhausted)


class PlanEnumerationTest(unittest.TestCase):
    def assertStatusPattern(self, plan):
        pointer = plan.pointer
        self.assertEqual(
            plan.status_tuple,
            (Status.COMPLETED,) * pointer
            + ((Status.IN_PROCESS,) if pointer < len(plan) else ())
            + (Status.TODO,) * max(len(plan) - pointer - 1, 0),
        )

    def test_every_status_tuple(self):
        landmarks = stmr_perception.LandmarkSet()
        for size in range(6):
            valid_list = []
            for status_tuple in itertools.product(Status, repeat=size):
                subgoal_list = [
                    stmr_plans.SubGoal(0, str(index), landmarks, status)
                    for index, status in enumerate(status_tuple)
                ]
                try:
                    plan = stmr_plans.PlanState(subgoal_list)
                except ValueError:
                    continue
                self.assertStatusPattern(plan)
                valid_list.append(status_tuple)
            # One valid plan per possible pointer.
            self.assertEqual(len(valid_list), size + 1)

    def test_every_completion_sequence(self):
        for size in range(6):
            fresh = make_plan(*((f"go {index}",) for index in range(size)))
            event_tuple = ("current",) + tuple(range(-1, size + 1))
            for length in range(4):
                for event_sequence in itertools.product(event_tuple, repeat=length):
                    plan = fresh
                    for event in event_sequence:
                        if event == "current":
                            next_plan = plan.complete_current()
                            self.assertEqual(
                                next_plan.pointer, min(plan.pointer + 1, size)
                            )
                        else:
                            next_plan = plan.complete_until(event)
                            self.assertEqual(next_plan.complete_until(event), next_plan)
                            self.assertEqual(
                                next_plan.pointer,
                                min(max(plan.pointer, event + 1), size),
                            )
                        self.assertStatusPattern(next_plan)
                        self.assertGreaterEqual(next_plan.pointer, plan.pointer)
                        self.assertEqual(next_plan.text_tuple, fresh.text_tuple)
                        plan = next_plan


class CurrentSubGoalLabelsTest(unittest.TestCase):
    legend = {1: "road", 2: "river", 3: "building"}

    def test_labels(self):
        plan = make_plan(
            ("cross the river to the white building", "river", "white building")
        )
        self.assertEqual(
            stmr_plans.current_subgoal_labels(plan, self.legend), frozenset({2, 3})
        )

    def test_unknown_landmark_is_omitted(self):
        plan = make_plan(("fly to the castle near the road", "castle", "road"))
        with self.assertLogs(level="WARNING"):
            self.assertEqual(
                stmr_plans.current_subgoal_labels(plan, self.legend), frozenset({1})
            )

    def test_without_landmarks(self):
        plan = make_plan(("lift off",), ("fly to the road", "road"))
        self.assertEqual(
            stmr_plans.current_subgoal_labels(plan, self.legend), frozenset()
        )
        self.assertEqual(
            stmr_plans.current_subgoal_labels(plan.complete_until(1), self.legend),
            frozenset(),
        )


if __name__ == "__main__":
    unittest.main()
