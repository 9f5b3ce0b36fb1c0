import unittest

from aerovln import stmr_perception
from aerovln import stmr_plans
from aerovln import stmr_utilities


class FakeBackend(object):
    def __init__(self, response="", error=None):
        self.response = response
        self.error = error
        self.prompt_list = []

    def complete(self, prompt: str) -> str:
        self.prompt_list.append(prompt)
        if self.error is not None:
            raise self.error
        return self.response


class WordExtractor(stmr_perception.abc.LandmarkExtractor):
    word_set = frozenset(("road", "river", "bridge"))

    def extract(self, instruction: str) -> tuple[str, ...]:
        return tuple(word for word in instruction.split() if word in self.word_set)


class RuleBasedDecomposerTest(unittest.TestCase):
    def test_delimiters(self):
        self.assertEqual(
            stmr_plans.RuleBasedDecomposer()(
                "Take off. Then fly along the road; afterwards turn left and land!"
            ),
            ("Take off", "fly along the road", "turn left", "land"),
        )

    def test_words_containing_delimiters(self):
        self.assertEqual(
            stmr_plans.RuleBasedDecomposer()("land on the sandy island"),
            ("land on the sandy island",),
        )

    def test_custom_pattern(self):
        self.assertEqual(
            stmr_plans.RuleBasedDecomposer(r"\|")("a, b | c"), ("a, b", "c")
        )


class LlmDecomposerTest(unittest.TestCase):
    def test_lines(self):
        backend = FakeBackend("1. Lift off.\n- fly to the road\n\n(a) land")
        decomposer = stmr_plans.LlmDecomposer(backend)
        self.assertEqual(
            decomposer("lift off, fly to the road and land"),
            ("Lift off", "fly to the road", "land"),
        )
        self.assertIn(
            "Instruction: lift off, fly to the road and land", backend.prompt_list[0]
        )

    def test_custom_prompt(self):
        backend = FakeBackend("go")
        stmr_plans.LlmDecomposer(backend, "steps of <${instruction}>")("go")
        self.assertEqual(backend.prompt_list, ["steps of <go>"])

    def test_failures(self):
        for backend in (
            FakeBackend("\n - \n"),
            FakeBackend(error=TimeoutError("slow")),
        ):
            with self.subTest(backend=backend):
                self.assertRaises(
                    stmr_utilities.PlanningBackendError,
                    stmr_plans.LlmDecomposer(backend),
                    "fly",
                )


class DecomposeInstructionTest(unittest.TestCase):
    def test_fresh_plan(self):
        plan = stmr_plans.decompose_instruction(
            "fly along the road, then cross the river to the bridge",
            landmark_extractor=WordExtractor(),
        )
        self.assertEqual(
            plan.text_tuple,
            ("fly along the road", "cross the river to the bridge"),
        )
        self.assertEqual(
            [tuple(subgoal.landmarks) for subgoal in plan],
            [("road",), ("river", "bridge")],
        )
        self.assertEqual(plan.pointer, 0)

    def test_only_delimiters(self):
        plan = stmr_plans.decompose_instruction(
            "  ...  ", landmark_extractor=WordExtractor()
        )
        self.assertEqual(plan.text_tuple, ("...",))

    def test_empty(self):
        for instruction in ("", "   "):
            with self.subTest(instruction=instruction):
                self.assertRaises(
                    stmr_utilities.EmptyInstructionError,
                    stmr_plans.decompose_instruction,
                    instruction,
                )

    def test_backend_error(self):
        self.assertRaises(
            stmr_utilities.PlanningBackendError,
            stmr_plans.decompose_instruction,
            "fly",
            stmr_plans.LlmDecomposer(FakeBackend(error=OSError("offline"))),
        )


if __name__ == "__main__":
    unittest.main()
