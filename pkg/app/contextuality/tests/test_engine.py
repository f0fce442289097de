"""
Tests for empirical models and single-state checks.
"""

import random
from fractions import Fraction

from django.test import SimpleTestCase

from assignment.enumeration import (
    assignment_from_labels,
    enumerate_assignments,
    verify_assignment,
)
from contextuality.engine import (
    StateVerdict,
    check_state,
    complex_probability,
    empirical_model,
    possible_supports,
    probability,
)
from core import linalg
from core.exceptions import DimensionMismatch, IncompleteScenario, ZeroState
from scenario.fixtures import load_fixture, yu_oh


class EmpiricalModelTests(SimpleTestCase):
    """Test empirical models of the completed Yu-Oh set."""

    def setUp(self):
        self.scenario = load_fixture('yu-oh-completed')

    def row(self, model, labels):
        ids = tuple(self.scenario.by_label(x).id for x in labels)
        return model.rows[model.contexts.index(ids)]

    def test_uniform_state(self):
        """Test the row of context {4, A, 1'} at (1, 1, 1)."""
        model = empirical_model(self.scenario, (1, 1, 1))

        self.assertEqual(
            self.row(model, ["4", "A", "1'"]),
            (Fraction(0), Fraction(1, 9), Fraction(8, 9)),
        )
        self.assertEqual(
            self.row(model, ["1", "2", "3"]), (Fraction(1, 3),) * 3
        )

    def test_rows_sum_to_one(self):
        """Test every model row sums to 1."""
        rng = random.Random(9)
        for _ in range(20):
            state = [rng.randint(-4, 4) for _ in range(3)]
            if not any(state):
                continue
            model = empirical_model(self.scenario, state)
            for row in model.rows:
                self.assertEqual(sum(row), 1)

    def test_rational_state_is_normalized(self):
        """Test scaling the state leaves the model unchanged."""
        a = empirical_model(self.scenario, (1, 2, 0))
        b = empirical_model(self.scenario, ("1/2", "1", "0"))

        self.assertEqual(a.rows, b.rows)
        self.assertEqual(a.state.coords, (1, 2, 0))

    def test_zero_state(self):
        """Test the zero vector is refused as a state."""
        with self.assertRaises(ZeroState):
            empirical_model(self.scenario, (0, 0, 0))

    def test_wrong_length(self):
        """Test a state of the wrong dimension is refused."""
        with self.assertRaises(DimensionMismatch):
            empirical_model(self.scenario, (1, 0))

    def test_incomplete_scenario(self):
        """Test an incomplete scenario has no empirical model."""
        with self.assertRaises(IncompleteScenario):
            empirical_model(yu_oh(), (1, 0, 0))

    def test_probability(self):
        """Test a single outcome probability."""
        ray = linalg.canonicalize((1, 1, 0))

        self.assertEqual(probability((1, 0, 0), ray), Fraction(1, 2))


class CheckStateTests(SimpleTestCase):
    """Test strong contextuality of single states."""

    def setUp(self):
        self.scenario = load_fixture('yu-oh-completed')
        self.assignments = enumerate_assignments(self.scenario)

    def labels(self, ids):
        return {self.scenario.rays[r].label for r in ids}

    def test_supports_at_basis_state(self):
        """Test the rays orthogonal to (0, 0, 1)."""
        impossible = possible_supports(self.scenario, (0, 0, 1))

        self.assertEqual(self.labels(impossible), {"1", "2", "6", "9"})

    def test_supports_at_uniform_state(self):
        """Test the impossible rays at (1, 1, 1)."""
        impossible = possible_supports(self.scenario, (1, 1, 1))

        self.assertEqual(
            self.labels(impossible), {"4", "5", "6", "10'", "11'", "12'"}
        )

    def test_basis_state_not_strongly_contextual(self):
        """Test the witness avoids every impossible ray."""
        check = check_state(self.scenario, self.assignments, (0, 0, 1))

        self.assertEqual(check.verdict, StateVerdict.NOT_STRONGLY_CONTEXTUAL)
        self.assertFalse(check.strongly_contextual)
        self.assertIs(check.witness, self.assignments[check.witness_index])
        self.assertTrue(verify_assignment(self.scenario, check.witness))
        self.assertTrue(
            check.witness.ones.isdisjoint(
                possible_supports(self.scenario, (0, 0, 1))
            )
        )

    def test_first_row_is_a_witness_too(self):
        """Test the first published row also avoids the impossible rays."""
        row = assignment_from_labels(
            self.scenario, "3 7 8 1' 3' 4' 6' 7' 10' 11' 12'".split()
        )
        impossible = possible_supports(self.scenario, (0, 0, 1))

        self.assertIn(row, self.assignments)
        self.assertTrue(row.ones.isdisjoint(impossible))

    def test_random_states_are_not_strongly_contextual(self):
        """Test no sampled state is strongly contextual for Yu-Oh."""
        rng = random.Random(42)
        for _ in range(100):
            state = [Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                     for _ in range(3)]
            if not any(state):
                continue
            check = check_state(self.scenario, self.assignments, state)
            self.assertFalse(check.strongly_contextual, state)

    def test_no_assignments_means_strongly_contextual(self):
        """Test every state is contextual without assignments."""
        scenario = load_fixture('cabello-18')

        check = check_state(scenario, [], (1, 0, 0, 0))

        self.assertTrue(check.strongly_contextual)
        self.assertIsNone(check.witness)


class ComplexProbabilityTests(SimpleTestCase):
    """Test the reduction of complex states to pairs of real states."""

    def test_random_identity(self):
        """Test <psi|P|psi> = <x|P|x> + <y|P|y> with no imaginary part."""
        rng = random.Random(17)
        checked = 0
        while checked < 1000:
            d = rng.randint(2, 4)
            x = [rng.randint(-5, 5) for _ in range(d)]
            y = [rng.randint(-5, 5) for _ in range(d)]
            ray = [rng.randint(-3, 3) for _ in range(d)]
            if not any(ray):
                continue
            real, imaginary = complex_probability(x, y, ray)

            p = linalg.canonicalize(ray)
            expected = Fraction(
                linalg.dot(x, p) ** 2 + linalg.dot(y, p) ** 2, p.norm2
            )
            self.assertEqual(imaginary, 0)
            self.assertEqual(real, expected)
            checked += 1

    def test_purely_imaginary_state(self):
        """Test i times a real state keeps that state's probability."""
        real, imaginary = complex_probability((0, 0), (1, 0), (1, 1))

        self.assertEqual(real, Fraction(1, 2))
        self.assertEqual(imaginary, 0)
