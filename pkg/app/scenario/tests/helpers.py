"""
Helpers shared by the randomized test suites.
"""

from itertools import product

from scenario.domain import build_scenario, complete_contexts
from scenario.fixtures import YU_OH_RAYS


def random_scenario(rng, low=4, high=8):
    """Completed 3D scenario on a random subset of the Yu-Oh directions.

    Contexts are the maximal orthogonal cliques of the chosen rays.
    """
    specs = rng.sample(YU_OH_RAYS, rng.randint(low, high))
    return complete_contexts(build_scenario(3, specs))


def brute_force_ones(scenario):
    """1-valued ray sets of every global assignment, by trying all choices.

    Walks the full product of one ray per context, so only suitable for
    small scenarios.
    """
    contexts = [set(c.ray_ids) for c in scenario.contexts]
    found = set()
    for choice in product(*[sorted(c) for c in contexts]):
        ones = frozenset(choice)
        if all(len(c & ones) == 1 for c in contexts):
            found.add(ones)
    return found
