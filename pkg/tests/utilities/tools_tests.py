import logging
import math
import unittest

import ranges

from aerovln import stmr_configurations
from aerovln import stmr_utilities


class ToolsTest(unittest.TestCase):
    def test_uniqify_sequence(self):
        self.assertEqual(
            stmr_utilities.uniqify_sequence(["road", "river", "road", "tree"]),
            ("road", "river", "tree"),
        )

    def test_clamp_to_range_inside(self):
        range_ = ranges.Range(0, 15, include_end=True)
        self.assertEqual(stmr_utilities.clamp_to_range(15, range_), (15, False))
        self.assertEqual(stmr_utilities.clamp_to_range(0, range_), (0, False))

    def test_clamp_to_range_outside(self):
        range_ = ranges.Range(0, 10, include_end=True)
        self.assertEqual(stmr_utilities.clamp_to_range(-3, range_), (0, True))
        self.assertEqual(stmr_utilities.clamp_to_range(12.5, range_), (10, True))

    def test_clamp_to_range_nan(self):
        range_ = ranges.Range(0, 10, include_end=True)
        self.assertEqual(stmr_utilities.clamp_to_range(math.nan, range_), (0, True))

    def test_normalize_angle(self):
        self.assertAlmostEqual(stmr_utilities.normalize_angle(2 * math.pi), 0)
        self.assertAlmostEqual(
            stmr_utilities.normalize_angle(-math.pi / 2), 3 * math.pi / 2
        )
        self.assertAlmostEqual(stmr_utilities.normalize_angle(5 * math.pi), math.pi)
        self.assertLess(stmr_utilities.normalize_angle(-1e-18), 2 * math.pi)

    def test_wrap_angle(self):
        self.assertAlmostEqual(stmr_utilities.wrap_angle(3 * math.pi / 2), -math.pi / 2)
        self.assertAlmostEqual(stmr_utilities.wrap_angle(math.pi), math.pi)
        self.assertAlmostEqual(stmr_utilities.wrap_angle(-math.pi / 4), -math.pi / 4)

    def test_format_number(self):
        self.assertEqual(stmr_utilities.format_number(10.0), "10")
        self.assertEqual(stmr_utilities.format_number(-3), "-3")
        self.assertEqual(stmr_utilities.format_number(2.5), "2.5")
        self.assertEqual(float(stmr_utilities.format_number(0.1 + 0.2)), 0.1 + 0.2)

    def test_get_cls_logger(self):
        class Local(object):
            pass

        logger = stmr_utilities.get_cls_logger(Local)
        self.assertTrue(logger.name.endswith("Local"))
        self.assertEqual(logger.level, stmr_configurations.LOGGING_LEVEL)
        self.assertEqual(
            stmr_utilities.get_cls_logger(Local, logging.DEBUG).level, logging.DEBUG
        )


class StmrObjectTest(unittest.TestCase):
    def test_repr(self):
        class Named(stmr_utilities.StmrObject):
            def __repr_content__(self):
                return "content"

        self.assertEqual(repr(Named()), "Named(content)")

    def test_copy(self):
        class Holder(stmr_utilities.StmrObject):
            def __init__(self):
                self.value_list = [1, 2]

        holder = Holder()
        copied = holder.copy()
        copied.value_list.append(3)
        self.assertEqual(holder.value_list, [1, 2])


class ExceptionsTest(unittest.TestCase):
    def test_run_config_error_message(self):
        error = stmr_utilities.RunConfigError("tau", 2, "must lie in (0, 1)")
        self.assertIn("tau", str(error))
        self.assertIsInstance(error, ValueError)

    def test_backend_errors_share_base(self):
        for error_class in (
            stmr_utilities.BackendTimeoutError,
            stmr_utilities.BackendTransportError,
            stmr_utilities.BackendRateLimitError,
            stmr_utilities.BackendUnavailableError,
            stmr_utilities.ScriptExhaustedError,
        ):
            self.assertTrue(issubclass(error_class, stmr_utilities.BackendError))


if __name__ == "__main__":
    unittest.main()
