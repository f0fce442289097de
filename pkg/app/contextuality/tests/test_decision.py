"""
Tests for the decision engines.
"""

import random
from itertools import combinations

from django.test import SimpleTestCase, override_settings

from assignment.enumeration import enumerate_assignments
from contextuality.decision import Method, Verdict, decide_3d, decide_general
from contextuality.engine import check_state
from core import linalg
from core.exceptions import IncompleteScenario, NotThreeDimensional
from scenario.domain import build_scenario, complete_contexts
from scenario.fixtures import load_fixture, yu_oh
from scenario.tests.helpers import random_scenario

# A state orthogonal to three rays of the ninth Cabello context; with that
# context dropped, parity forces one of those rays to 1.
OPEN_CABELLO_STATE = (1, 1, 1, -1)


def open_cabello():
    """Cabello-18 without its last context."""
    full = load_fixture('cabello-18')
    return build_scenario(
        4,
        [(r.label, r.vector.coords) for r in full.rays],
        [full.context_labels(c) for c in full.contexts[:8]],
    )


def candidate_states(scenario):
    """States that represent every possible 3D strongly contextual set.

    Lines orthogonal to two ray directions and basis vectors of planes
    orthogonal to one ray direction.
    """
    directions = sorted({ray.vector for ray in scenario.rays})
    found = set()
    for a, b in combinations(directions, 2):
        found.add(linalg.cross3(a, b))
    for u in directions:
        plane = linalg.orthocomplement(linalg.Subspace.span([u], 3))
        found.update(plane.basis)
    return sorted(found)


def assert_sound(test, scenario, assignments, report):
    """Every witness and every sum of basis vectors is strongly contextual."""
    for subspace in report.witness_subspaces:
        points = list(subspace.basis)
        points.append([sum(c) for c in zip(*subspace.basis)])
        for point in points:
            check = check_state(scenario, assignments, point)
            test.assertTrue(check.strongly_contextual, point)


class YuOhDecisionTests(SimpleTestCase):
    """Test the headline verdict on the Yu-Oh set."""

    def setUp(self):
        self.scenario = complete_contexts(yu_oh())
        self.assignments = enumerate_assignments(self.scenario)

    def test_general_engine(self):
        """Test the general engine finds no strongly contextual state."""
        report = decide_general(self.scenario, self.assignments)

        self.assertEqual(report.verdict, Verdict.NO_STRONGLY_CONTEXTUAL_STATE)
        self.assertEqual(report.method, Method.GENERAL)
        self.assertEqual(report.assignment_count, 24)
        self.assertEqual(report.witnesses, ())
        self.assertEqual(report.all_ones, ())

    def test_pairwise_engine(self):
        """Test all 300 pair lines are excluded."""
        report = decide_3d(self.scenario, self.assignments)

        self.assertEqual(report.verdict, Verdict.NO_STRONGLY_CONTEXTUAL_STATE)
        self.assertEqual(report.method, Method.SPECIALIZED_3D)
        self.assertEqual(len(report.diagnostics), 300)
        self.assertTrue(all(d.excluded for d in report.diagnostics))
        self.assertEqual(report.witness_subspaces, ())

    def test_incomplete_scenario(self):
        """Test both engines refuse an incomplete scenario."""
        with self.assertRaises(IncompleteScenario):
            decide_general(yu_oh(), self.assignments)
        with self.assertRaises(IncompleteScenario):
            decide_3d(yu_oh(), self.assignments)


class ControlDecisionTests(SimpleTestCase):
    """Test scenarios with known answers."""

    def test_cabello_every_state(self):
        """Test no assignment means every state is strongly contextual."""
        scenario = load_fixture('cabello-18')

        report = decide_general(scenario, enumerate_assignments(scenario))

        self.assertEqual(
            report.verdict, Verdict.ALL_STATES_STRONGLY_CONTEXTUAL
        )
        self.assertEqual(report.assignment_count, 0)

    def test_pairwise_engine_refuses_four_dimensions(self):
        """Test the pairwise engine needs d = 3."""
        with self.assertRaises(NotThreeDimensional):
            decide_3d(load_fixture('cabello-18'), [])

    def test_single_context(self):
        """Test one context leaves no strongly contextual state."""
        scenario = complete_contexts(
            build_scenario(3, [('a', (1, 2, 3))], [['a']])
        )
        assignments = enumerate_assignments(scenario)

        for engine in (decide_general, decide_3d):
            report = engine(scenario, assignments)
            self.assertEqual(
                report.verdict, Verdict.NO_STRONGLY_CONTEXTUAL_STATE
            )
            self.assertEqual(report.assignment_count, 3)

    def test_open_cabello_has_witnesses(self):
        """Test dropping one Cabello context leaves contextual states."""
        scenario = open_cabello()
        assignments = enumerate_assignments(scenario)

        report = decide_general(scenario, assignments)

        self.assertTrue(assignments)
        self.assertEqual(report.verdict, Verdict.WITNESS_STATES)
        self.assertTrue(
            check_state(
                scenario, assignments, OPEN_CABELLO_STATE
            ).strongly_contextual
        )
        self.assertTrue(
            any(
                s.contains(OPEN_CABELLO_STATE)
                for s in report.witness_subspaces
            )
        )
        assert_sound(self, scenario, assignments, report)

    def test_witnesses_are_basis_vectors(self):
        """Test witnesses are the sorted basis vectors of the subspaces."""
        scenario = open_cabello()
        report = decide_general(scenario, enumerate_assignments(scenario))

        self.assertEqual(
            set(report.witnesses),
            {v for s in report.witness_subspaces for v in s.basis},
        )
        self.assertEqual(list(report.witnesses), sorted(report.witnesses))


@override_settings(CTX_THREADS=1)
class RandomScenarioTests(SimpleTestCase):
    """Test both engines against a brute-force search over states."""

    def test_engines_agree_with_brute_force(self):
        """Test both engines against checking every candidate state."""
        rng = random.Random(20240101)
        for _ in range(200):
            scenario = random_scenario(rng)
            assignments = enumerate_assignments(scenario)
            general = decide_general(scenario, assignments)
            special = decide_3d(scenario, assignments)

            self.assertEqual(general.verdict, special.verdict)
            self.assertEqual(
                [s.key for s in general.witness_subspaces],
                [s.key for s in special.witness_subspaces],
            )
            self.assertEqual(general.all_ones, special.all_ones)
            if not assignments:
                self.assertEqual(
                    general.verdict, Verdict.ALL_STATES_STRONGLY_CONTEXTUAL
                )
                continue

            for state in candidate_states(scenario):
                contextual = check_state(
                    scenario, assignments, state
                ).strongly_contextual
                covered = any(
                    s.contains(state) for s in general.witness_subspaces
                )
                self.assertEqual(contextual, covered, state)
            assert_sound(self, scenario, assignments, general)

    def test_worker_count_does_not_change_reports(self):
        """Test reports are the same serially and in parallel."""
        rng = random.Random(99)
        for _ in range(10):
            scenario = random_scenario(rng)
            assignments = enumerate_assignments(scenario)
            serial = decide_general(scenario, assignments)
            with override_settings(CTX_THREADS=4):
                pooled = decide_general(scenario, assignments)
            self.assertEqual(serial, pooled)
