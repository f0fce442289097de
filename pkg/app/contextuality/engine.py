"""
Empirical models and the strong contextuality test for one state.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from assignment.enumeration import require_complete
from core import linalg
from core.exceptions import (
    DimensionMismatch,
    InvariantViolation,
    ZeroState,
    ZeroVector,
)


class StateVerdict(str, enum.Enum):
    STRONGLY_CONTEXTUAL = "StronglyContextual"
    NOT_STRONGLY_CONTEXTUAL = "NotStronglyContextual"


@dataclass(frozen=True)
class StateCheck:
    """Outcome of check_state, with a witness assignment when one exists."""

    verdict: StateVerdict
    witness: object = None
    witness_index: int = None

    @property
    def strongly_contextual(self):
        return self.verdict == StateVerdict.STRONGLY_CONTEXTUAL


@dataclass(frozen=True)
class EmpiricalModel:
    """Outcome probabilities of every context for one real pure state.

    rows[j][k] is the probability that the k-th ray of context j is the
    one valued 1.
    """

    state: linalg.RayVector
    contexts: tuple
    rows: tuple


def as_state(scenario, state):
    """Canonical direction of a real state given in exact coordinates."""
    coords = tuple(state)
    if len(coords) != scenario.dimension:
        raise DimensionMismatch(
            f"The state has {len(coords)} coordinates, the scenario is "
            f"{scenario.dimension}-dimensional."
        )
    try:
        return linalg.canonicalize(coords)
    except ZeroVector:
        raise ZeroState("The zero vector is not a state.") from None


def probability(state, ray):
    """<psi|P|psi> for the normalized state and the projector onto ray."""
    overlap = linalg.dot(state, ray)
    return Fraction(overlap * overlap, linalg.dot(state, state) * ray.norm2)


def empirical_model(scenario, state):
    """Empirical model of a completed scenario at a real pure state."""
    require_complete(scenario)
    state = as_state(scenario, state)
    rows = []
    for context in scenario.contexts:
        row = tuple(probability(state, scenario.vector(r)) for r in context)
        if sum(row) != 1:
            raise InvariantViolation(
                f"Probabilities of {scenario.context_labels(context)} sum "
                f"to {sum(row)}."
            )
        rows.append(row)
    return EmpiricalModel(
        state=state,
        contexts=tuple(c.ray_ids for c in scenario.contexts),
        rows=tuple(rows),
    )


def possible_supports(scenario, state):
    """Rays that can never be valued 1 at state (probability 0)."""
    state = as_state(scenario, state)
    return frozenset(
        ray.id for ray in scenario.rays if linalg.dot(state, ray.vector) == 0
    )


def check_state(scenario, assignments, state):
    """Decide strong contextuality at one state.

    The state is strongly contextual iff every global assignment values
    some impossible ray 1. Otherwise the first assignment whose 1-valued
    rays are all possible is returned as witness.
    """
    impossible = possible_supports(scenario, state)
    for index, assignment in enumerate(assignments):
        if assignment.ones.isdisjoint(impossible):
            return StateCheck(
                StateVerdict.NOT_STRONGLY_CONTEXTUAL, assignment, index
            )
    return StateCheck(StateVerdict.STRONGLY_CONTEXTUAL)


def complex_probability(real, imag, ray):
    """<psi|P|psi> for psi = real + i*imag and a real projector P.

    Evaluated term by term from the expansion
    <x|P|x> + <y|P|y> - i<y|P|x> + i<x|P|y>; returns the real and the
    imaginary part as fractions, the state left unnormalized.
    """
    ray = linalg.canonicalize(ray)
    norm = ray.norm2

    def braket(u, w):
        return Fraction(linalg.dot(u, ray) * linalg.dot(ray, w), norm)

    real_part = braket(real, real) + braket(imag, imag)
    imaginary_part = braket(real, imag) - braket(imag, real)
    return real_part, imaginary_part
