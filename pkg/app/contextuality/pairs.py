"""
Pairwise analysis of candidate lines in three dimensions.

Two non-parallel rays psi1, psi2 leave one line I orthogonal to both.
I holds strongly contextual states iff every global assignment values
some ray of the plane span(psi1, psi2) 1, since those are exactly the
rays orthogonal to I. The classification into three situations is kept
as a diagnostic next to that test.
"""

import enum
import logging
from dataclasses import dataclass

from core import linalg
from core.exceptions import NotThreeDimensional

logger = logging.getLogger(__name__)


class Situation(str, enum.Enum):
    S1_ORTHOGONAL = "S1_orthogonal"
    S2_SHARED_CONTEXT_RAY = "S2_shared_context_ray"
    S3_GENERAL = "S3_general"


@dataclass(frozen=True)
class PairDiagnosis:
    """Result of line_excluded for one pair of rays."""

    pair: tuple
    situation: Situation
    excluded: bool
    line: linalg.RayVector
    witness_index: int = None
    shortcut_ray: int = None
    shortcut_index: int = None
    shortcut_disagrees: bool = False
    explanation: str = ""


def require_three_dimensional(scenario):
    if scenario.dimension != 3:
        raise NotThreeDimensional(
            f"The pairwise procedure needs d = 3, not d = "
            f"{scenario.dimension}."
        )


def _shortcut_rays(scenario, p1, p2, orthogonal):
    """Context-mates of p1 or p2 orthogonal to both, by ray id."""
    a, b = scenario.vector(p1), scenario.vector(p2)
    found = []
    for r in sorted(scenario.mates[p1] | scenario.mates[p2]):
        ray = scenario.rays[r]
        if r in (p1, p2) or (ray.synthetic and not orthogonal):
            continue
        if linalg.dot(ray.vector, a) == 0 and linalg.dot(ray.vector, b) == 0:
            found.append(r)
    return found


def line_excluded(scenario, assignments, p1, p2):
    """Decide whether the line orthogonal to rays p1 and p2 is excluded.

    The line is excluded iff some assignment values no ray of
    span(p1, p2) 1. In three dimensions a ray lies in that plane iff it
    is orthogonal to the line, which is how membership is tested.
    """
    require_three_dimensional(scenario)
    a, b = scenario.ray(p1), scenario.ray(p2)
    line = linalg.cross3(a.vector, b.vector)
    in_plane = frozenset(
        ray.id for ray in scenario.rays if linalg.dot(ray.vector, line) == 0
    )
    witness_index = next(
        (
            i
            for i, assignment in enumerate(assignments)
            if assignment.ones.isdisjoint(in_plane)
        ),
        None,
    )
    excluded = witness_index is not None

    orthogonal = linalg.dot(a.vector, b.vector) == 0
    candidates = _shortcut_rays(scenario, p1, p2, orthogonal)
    if orthogonal:
        situation = Situation.S1_ORTHOGONAL
    elif candidates:
        situation = Situation.S2_SHARED_CONTEXT_RAY
    else:
        situation = Situation.S3_GENERAL

    shortcut_ray = candidates[0] if candidates else None
    shortcut_index = None
    for r in candidates:
        shortcut_index = next(
            (i for i, v in enumerate(assignments) if v[r]), None
        )
        if shortcut_index is not None:
            shortcut_ray = r
            break
    disagrees = shortcut_index is not None and not excluded

    plane = f"span({a.label}, {b.label})"
    if excluded:
        explanation = (
            f"assignment row {witness_index + 1} values no ray of {plane} 1"
        )
    else:
        explanation = f"every assignment values a ray of {plane} 1"
    if disagrees:
        logger.warning(
            "Shortcut through %s would exclude the line of %s but %s",
            scenario.rays[shortcut_ray].label,
            plane,
            explanation,
        )
    return PairDiagnosis(
        pair=(p1, p2),
        situation=situation,
        excluded=excluded,
        line=line,
        witness_index=witness_index,
        shortcut_ray=shortcut_ray,
        shortcut_index=shortcut_index,
        shortcut_disagrees=disagrees,
        explanation=explanation,
    )
