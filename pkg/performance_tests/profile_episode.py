import cProfile

from aerovln import stmr_evaluations
from aerovln import stmr_planners
from aerovln import stmr_worlds

scene = stmr_worlds.riverside_scene()
episode = stmr_worlds.builtin_suite(scene, 1)[0]


def t():
    stmr_evaluations.run_episode(scene, episode, stmr_planners.GroundTruthBackend())


cProfile.run(t.__code__, sort=2)
