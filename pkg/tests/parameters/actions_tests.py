import math
import unittest

import ranges

from aerovln import stmr_parameters
from aerovln import stmr_utilities


class ActionVerbTest(unittest.TestCase):
    def test_from_any_alias(self):
        for alias, verb in (
            ("UP", stmr_parameters.ActionVerb.LIFT),
            ("forward", stmr_parameters.ActionVerb.STRAIGHT),
            (" Backward ", stmr_parameters.ActionVerb.BACK),
            ("stop", stmr_parameters.ActionVerb.STOP),
        ):
            with self.subTest(alias=alias):
                self.assertIs(stmr_parameters.ActionVerb.from_any(alias), verb)

    def test_from_any_unknown(self):
        self.assertRaises(
            stmr_utilities.CannotParseError,
            stmr_parameters.ActionVerb.from_any,
            "hover",
        )

    def test_is_turn(self):
        self.assertTrue(stmr_parameters.ActionVerb.LEFT.is_turn)
        self.assertTrue(stmr_parameters.ActionVerb.RIGHT.is_turn)
        self.assertFalse(stmr_parameters.ActionVerb.LIFT.is_turn)


class ActionTest(unittest.TestCase):
    def test_out_of_range(self):
        self.assertRaises(
            stmr_utilities.InvalidActionError,
            stmr_parameters.Action,
            "left",
            16,
            0,
        )
        self.assertRaises(
            stmr_utilities.InvalidActionError,
            stmr_parameters.Action,
            "straight",
            0,
            10.5,
        )
        self.assertRaises(
            stmr_utilities.InvalidActionError,
            stmr_parameters.Action,
            "straight",
            0,
            math.nan,
        )

    def test_custom_range(self):
        action = stmr_parameters.Action(
            "straight", 0, 20, distance_range=ranges.Range(0, 50, include_end=True)
        )
        self.assertEqual(action.distance, 20)

    def test_note_is_not_identity(self):
        self.assertEqual(
            stmr_parameters.Action("left", 15, 0, note="clamped"),
            stmr_parameters.Action("left", 15, 0),
        )

    def test_hover(self):
        hover = stmr_parameters.Action.hover("no answer")
        self.assertIs(hover.verb, stmr_parameters.ActionVerb.STRAIGHT)
        self.assertEqual((hover.degree, hover.distance), (0, 0))
        self.assertEqual(hover.note, "no answer")

    def test_signed_yaw_change(self):
        self.assertAlmostEqual(
            stmr_parameters.Action("left", 15).signed_yaw_change, math.radians(15)
        )
        self.assertAlmostEqual(
            stmr_parameters.Action("right", 15).signed_yaw_change, -math.radians(15)
        )
        self.assertEqual(stmr_parameters.Action("straight", 10).signed_yaw_change, 0)

    def test_from_any(self):
        self.assertEqual(
            stmr_parameters.Action.from_any(("right", 10, 0)),
            stmr_parameters.Action("right", 10, 0),
        )
        self.assertTrue(stmr_parameters.Action.from_any("stop").is_stop)

    def test_replace(self):
        action = stmr_parameters.Action("straight", 0, 10)
        self.assertEqual(action.replace(distance=5).distance, 5)
        self.assertEqual(action.distance, 10)


if __name__ == "__main__":
    unittest.main()
