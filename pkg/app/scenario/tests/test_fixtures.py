"""
Tests for the built-in scenarios.
"""

from itertools import combinations

from django.test import SimpleTestCase

from core import linalg
from core.exceptions import UnknownFixture
from scenario.fixtures import FIXTURES, load_fixture


class FixtureTests(SimpleTestCase):
    """Test fixture loading and structure."""

    def test_unknown_fixture(self):
        """Test an unknown name raises."""
        with self.assertRaises(UnknownFixture):
            load_fixture("peres-33")

    def test_every_fixture_loads(self):
        """Test each fixture builds a valid scenario."""
        for name in FIXTURES:
            scenario = load_fixture(name)
            self.assertTrue(scenario.rays, name)

    def test_yu_oh(self):
        """Test the bare Yu-Oh set."""
        scenario = load_fixture("yu-oh")

        self.assertEqual(scenario.dimension, 3)
        self.assertEqual(len(scenario.rays), 13)
        self.assertEqual(len(scenario.contexts), 16)
        self.assertFalse(scenario.is_complete)
        self.assertEqual(scenario.completion_labels[0], "1'")

    def test_yu_oh_completed(self):
        """Test the completed Yu-Oh set."""
        scenario = load_fixture("yu-oh-completed")

        self.assertTrue(scenario.is_complete)
        self.assertEqual(len(scenario.rays), 25)
        self.assertEqual(scenario.by_label("2'").given_coords, (-1, -2, 1))
        self.assertEqual(scenario.by_label("2'").vector.coords, (1, 2, -1))

    def test_cabello_18(self):
        """Test 18 rays, each in exactly two of nine orthogonal bases."""
        scenario = load_fixture("cabello-18")

        self.assertEqual(scenario.dimension, 4)
        self.assertEqual(len(scenario.rays), 18)
        self.assertEqual(len(scenario.contexts), 9)
        self.assertTrue(scenario.is_complete)
        for ray in scenario.rays:
            self.assertEqual(len(scenario.contexts_of[ray.id]), 2)
        for context in scenario.contexts:
            for a, b in combinations(context, 2):
                self.assertEqual(
                    linalg.dot(scenario.vector(a), scenario.vector(b)), 0
                )
