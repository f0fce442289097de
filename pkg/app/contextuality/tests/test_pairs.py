"""
Tests for the pairwise line analysis in three dimensions.
"""

from itertools import combinations

from django.test import SimpleTestCase

from assignment.enumeration import enumerate_assignments
from contextuality.pairs import Situation, line_excluded
from core import linalg
from core.exceptions import NotThreeDimensional, ParallelRays
from scenario.fixtures import load_fixture


class LineExcludedTests(SimpleTestCase):
    """Test pair diagnoses on the completed Yu-Oh set."""

    def setUp(self):
        self.scenario = load_fixture('yu-oh-completed')
        self.assignments = enumerate_assignments(self.scenario)

    def diagnose(self, a, b):
        return line_excluded(
            self.scenario,
            self.assignments,
            self.scenario.by_label(a).id,
            self.scenario.by_label(b).id,
        )

    def test_orthogonal_pair(self):
        """Test (1, 2) is orthogonal and excluded through ray 3."""
        diagnosis = self.diagnose("1", "2")

        self.assertEqual(diagnosis.situation, Situation.S1_ORTHOGONAL)
        self.assertTrue(diagnosis.excluded)
        self.assertEqual(diagnosis.line.coords, (0, 0, 1))
        self.assertEqual(
            self.scenario.rays[diagnosis.shortcut_ray].label, "3"
        )
        self.assertFalse(diagnosis.shortcut_disagrees)

    def test_shared_context_ray(self):
        """Test (1, 5) shares the orthogonal ray 2 through its contexts."""
        diagnosis = self.diagnose("1", "5")

        self.assertEqual(diagnosis.situation, Situation.S2_SHARED_CONTEXT_RAY)
        self.assertEqual(
            self.scenario.rays[diagnosis.shortcut_ray].label, "2"
        )
        self.assertEqual(diagnosis.line.coords, (0, 1, 0))
        self.assertTrue(diagnosis.excluded)

    def test_general_pair(self):
        """Test (3, 1') has no ray orthogonal to both."""
        diagnosis = self.diagnose("3", "1'")

        self.assertEqual(diagnosis.situation, Situation.S3_GENERAL)
        self.assertIsNone(diagnosis.shortcut_ray)
        self.assertEqual(diagnosis.line.coords, (1, -2, 0))
        self.assertTrue(diagnosis.excluded)

    def test_witness_avoids_the_plane(self):
        """Test the witness assignment values no ray of the plane 1."""
        for a, b in [("1", "2"), ("1", "5"), ("3", "1'"), ("A", "B")]:
            diagnosis = self.diagnose(a, b)
            witness = self.assignments[diagnosis.witness_index]
            for ray_id in witness.ones:
                self.assertNotEqual(
                    linalg.dot(self.scenario.vector(ray_id), diagnosis.line),
                    0,
                )

    def test_original_pairs_need_no_general_case(self):
        """Test every pair of the 13 original rays is S1 or S2."""
        originals = [r.id for r in self.scenario.rays if not r.synthetic]
        for p1, p2 in combinations(originals, 2):
            diagnosis = line_excluded(
                self.scenario, self.assignments, p1, p2
            )
            self.assertNotEqual(diagnosis.situation, Situation.S3_GENERAL)
            self.assertTrue(diagnosis.excluded)
            self.assertFalse(diagnosis.shortcut_disagrees)

    def test_shortcut_assignment_values_the_shortcut_ray(self):
        """Test the shortcut assignment values the shortcut ray 1."""
        diagnosis = self.diagnose("1", "5")
        assignment = self.assignments[diagnosis.shortcut_index]

        self.assertEqual(assignment[diagnosis.shortcut_ray], 1)

    def test_parallel_pair(self):
        """Test parallel rays leave no line."""
        with self.assertRaises(ParallelRays):
            self.diagnose("1", "1")

    def test_needs_three_dimensions(self):
        """Test the pair analysis needs d = 3."""
        with self.assertRaises(NotThreeDimensional):
            line_excluded(load_fixture('cabello-18'), [], 0, 1)
