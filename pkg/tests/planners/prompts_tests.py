import os
import tempfile
import unittest

import ranges

from aerovln import stmr_converters
from aerovln import stmr_matrices
from aerovln import stmr_parameters
from aerovln import stmr_perception
from aerovln import stmr_planners
from aerovln import stmr_plans
from aerovln import stmr_utilities

from ..converters.matrices_tests import LEGEND, make_matrix

Action = stmr_parameters.Action
Entry = stmr_planners.HistoryEntry
Verb = stmr_parameters.ActionVerb
TEMPLATE_NAME_DICT = stmr_planners.configurations.SPATIAL_ENCODING_TO_TEMPLATE_NAME


def make_plan() -> stmr_plans.PlanState:
    return stmr_plans.PlanState.from_text_sequence(
        ["lift off", "fly along the road", "land next to the parking lot"],
        [
            stmr_perception.LandmarkSet(),
            stmr_perception.LandmarkSet(["road"]),
            stmr_perception.LandmarkSet(["parking lot"]),
        ],
    ).complete_current()


class PromptTemplateTest(unittest.TestCase):
    def test_missing_placeholder(self):
        self.assertRaises(
            stmr_utilities.TemplateError,
            stmr_planners.PromptTemplate,
            "t",
            "${instruction} ${history} ${map}",
        )

    def test_unknown_placeholder(self):
        self.assertRaises(
            stmr_utilities.TemplateError,
            stmr_planners.PromptTemplate,
            "t",
            "${instruction} ${history} ${map} ${plan} ${weather}",
        )

    def test_invalid_syntax(self):
        self.assertRaises(
            stmr_utilities.TemplateError,
            stmr_planners.PromptTemplate,
            "t",
            "${instruction} ${history} ${map} ${plan} costs $",
        )

    def test_missing_value(self):
        template = stmr_planners.PromptTemplate(
            "t", "${instruction} ${history} ${map} ${plan}"
        )
        self.assertRaises(
            stmr_utilities.TemplateError,
            template.render,
            instruction="i",
            history="h",
            map="m",
        )

    def test_task_description(self):
        template = stmr_planners.PromptTemplate(
            "t",
            "Fly ${max_distance} m at most.\nRules.\n"
            "Instruction: ${instruction}\n${history} ${map} ${plan}",
        )
        self.assertEqual(
            template.task_description(max_distance=10), "Fly 10 m at most.\nRules."
        )


class LoadTemplateTest(unittest.TestCase):
    def test_bundled(self):
        for name in ("stmr_v1", "topo_v1", "metric_v1"):
            with self.subTest(name=name):
                self.assertEqual(stmr_planners.load_template(name).name, name)

    def test_path(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "mine.txt")
            with open(path, "w", encoding="utf-8") as f:
                f.write("${instruction}|${history}|${map}|${plan}")
            template = stmr_planners.load_template(path)
        self.assertEqual(template.name, "mine")
        self.assertEqual(
            template.render(instruction="i", history="h", map="m", plan="p"),
            "i|h|m|p",
        )

    def test_unknown(self):
        self.assertRaises(
            stmr_utilities.TemplateError, stmr_planners.load_template, "stmr_v0"
        )


class HistoryTest(unittest.TestCase):
    def test_merge_straight_flights(self):
        self.assertEqual(
            stmr_planners.merge_history(
                [Action("straight", 0, 10), Action("straight", 0, 10)]
            ),
            (Entry(Verb.STRAIGHT, 0, 20),),
        )

    def test_merge_turns(self):
        self.assertEqual(
            stmr_planners.merge_history([Action("left", 15), Action("left", 15)]),
            (Entry(Verb.LEFT, 30, 0),),
        )

    def test_no_merge(self):
        for history in (
            [Action("left", 15), Action("right", 15)],
            [Action("left", 15, 2), Action("left", 15)],
            [Action("stop"), Action("stop")],
            [Entry(Verb.STRAIGHT, 0, 10, True), Action("straight", 0, 10)],
            [Action("lift", 0, 5), Action("down", 0, 5)],
        ):
            with self.subTest(history=history):
                self.assertEqual(len(stmr_planners.merge_history(history)), 2)

    def test_text(self):
        self.assertEqual(
            stmr_planners.history_to_text(
                [
                    Action("lift", 0, 5),
                    Action("lift", 0, 5),
                    Entry(Verb.STRAIGHT, 0, 2.5, True),
                ]
            ),
            "[(lift, 0 degrees, 10 meters), (straight, 0 degrees, 2.5 meters, "
            "collision)]",
        )


class BuildPromptTest(stmr_utilities.GoldenFileTestCase):
    def setUp(self):
        self.history = [Action("lift", 0, 10), Action("straight", 0, 10)]
        self.map_text = stmr_converters.serialize_matrix(make_matrix())

    def build(self, **kwargs):
        return stmr_planners.build_prompt(
            make_plan(),
            self.history,
            self.map_text,
            "Lift off,  fly along the road\nand land next to the parking lot.",
            **kwargs,
        )

    def test_stmr_golden(self):
        bundle = self.build()
        self.assertEqual(bundle.template_name, "stmr_v1")
        self.assertGolden(bundle.text, "prompt_stmr_v1.txt")

    def test_topo_golden(self):
        graph = stmr_matrices.PlaceGraph()
        for x, caption in ((0, "road"), (20, "river"), (40, "bridge")):
            graph.visit(stmr_parameters.UavPose(x, 0, 5), [caption])
        self.map_text = stmr_converters.encode_topo(graph)
        bundle = self.build(template=TEMPLATE_NAME_DICT["topo"], legend=LEGEND)
        self.assertEqual(bundle.template_name, "topo_v1")
        self.assertGolden(bundle.text, "prompt_topo_v1.txt")

    def test_metric_golden(self):
        Observation = stmr_perception.LandmarkObservation
        self.map_text = stmr_converters.encode_metric(
            [
                Observation("parking lot", -90, 12.4),
                Observation("building", 45, 10),
                Observation("road", 0, 5),
            ]
        )
        bundle = self.build(template=TEMPLATE_NAME_DICT["metric"], legend=LEGEND)
        self.assertEqual(bundle.template_name, "metric_v1")
        self.assertGolden(bundle.text, "prompt_metric_v1.txt")

    def test_deterministic(self):
        self.assertEqual(self.build(), self.build())

    def test_blocks(self):
        bundle = self.build()
        self.assertEqual(
            bundle.instruction,
            "Lift off, fly along the road and land next to the parking lot.",
        )
        self.assertEqual(
            bundle.history,
            "[(lift, 0 degrees, 10 meters), (straight, 0 degrees, 10 meters)]",
        )
        self.assertEqual(bundle.map_text, self.map_text)
        self.assertTrue(bundle.plan_text.startswith("1. (Completed) Lift off.\n"))
        self.assertTrue(bundle.task_description.startswith("[Task Description]"))
        self.assertNotIn("Instruction:", bundle.task_description)
        self.assertIn("20x20", bundle.task_description)
        self.assertIn("[10,10]", bundle.task_description)
        self.assertTrue(bundle.text.endswith(f"\n{bundle.plan_text}\n"))

    def test_other_encodings_get_the_legend(self):
        for encoding in ("topo", "metric"):
            with self.subTest(encoding=encoding):
                bundle = self.build(
                    template=TEMPLATE_NAME_DICT[encoding],
                    legend=LEGEND,
                )
                self.assertIn(stmr_converters.LegendToText()(LEGEND), bundle.text)

    def test_limits(self):
        bundle = self.build(
            degree_range=ranges.Range(0, 30, include_end=True),
            matrix_size=10,
        )
        self.assertIn("0-30 degrees", bundle.text)
        self.assertIn("10x10", bundle.text)
        self.assertIn("[5,5]", bundle.text)


if __name__ == "__main__":
    unittest.main()
