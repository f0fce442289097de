"""
Decision engines for the existence of strongly contextual states.

A real pure state x is strongly contextual iff for every global
assignment v_i some ray valued 1 by v_i is orthogonal to x, that is iff
x lies in the intersection over i of the unions of the hyperplanes P⊥,
P in B_i. Both engines compute that set exactly:

- decide_general picks one 1-valued ray per assignment and keeps the
  span of the picks below full rank; every surviving choice leaves the
  orthocomplement of its span as strongly contextual states.
- decide_3d uses the three dimensional geometry: a strongly contextual
  state lies on two distinct planes P1⊥, P2⊥ (then on their line) or
  every assignment reuses one direction u (then anywhere on u⊥).
"""

import enum
import logging
from dataclasses import dataclass
from itertools import combinations

from assignment.enumeration import require_complete
from contextuality.pairs import line_excluded, require_three_dimensional
from core import linalg
from core.utils import parallel_map

logger = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    NO_STRONGLY_CONTEXTUAL_STATE = "NoStronglyContextualState"
    WITNESS_STATES = "WitnessStates"
    ALL_STATES_STRONGLY_CONTEXTUAL = "AllStatesStronglyContextual"


class Method(str, enum.Enum):
    GENERAL = "general"
    SPECIALIZED_3D = "specialized3d"


@dataclass(frozen=True)
class AnalysisReport:
    """Verdict of a decision engine with its evidence."""

    verdict: Verdict
    method: Method
    assignment_count: int
    witnesses: tuple = ()
    witness_subspaces: tuple = ()
    diagnostics: tuple = ()
    all_ones: tuple = ()


def _directions(scenario, assignment):
    """Distinct directions of the 1-valued rays, in ray id order."""
    found = []
    for ray_id in sorted(assignment.ones):
        vector = scenario.vector(ray_id)
        if vector not in found:
            found.append(vector)
    return found


def _common_directions(scenario, assignments):
    """Directions valued 1 by every assignment."""
    common = None
    for assignment in assignments:
        found = set(_directions(scenario, assignment))
        common = found if common is None else common & found
    return tuple(sorted(common or ()))


def _inside(small, large):
    """True iff small is a proper subspace of large."""
    return small.rank < large.rank and all(
        large.contains(v) for v in small.basis
    )


def _report(method, assignments, subspaces, diagnostics=(), all_ones=()):
    if not assignments:
        return AnalysisReport(
            verdict=Verdict.ALL_STATES_STRONGLY_CONTEXTUAL,
            method=method,
            assignment_count=0,
        )
    unique = {}
    for subspace in subspaces:
        unique.setdefault(subspace.key, subspace)
    ordered = [
        s
        for key, s in sorted(unique.items())
        if not any(_inside(s, other) for other in unique.values())
    ]
    witnesses = sorted({v for s in ordered for v in s.basis})
    verdict = (
        Verdict.WITNESS_STATES
        if ordered
        else Verdict.NO_STRONGLY_CONTEXTUAL_STATE
    )
    logger.info(
        "%s engine: %s over %d assignments",
        method.value,
        verdict.value,
        len(assignments),
    )
    return AnalysisReport(
        verdict=verdict,
        method=method,
        assignment_count=len(assignments),
        witnesses=tuple(witnesses),
        witness_subspaces=tuple(ordered),
        diagnostics=tuple(diagnostics),
        all_ones=tuple(all_ones),
    )


def decide_3d(scenario, assignments):
    """Pairwise line procedure for three dimensional scenarios."""
    require_three_dimensional(scenario)
    require_complete(scenario)
    if not assignments:
        return _report(Method.SPECIALIZED_3D, assignments, ())

    all_ones = _common_directions(scenario, assignments)
    planes = [
        linalg.orthocomplement(linalg.Subspace.span([u], 3))
        for u in all_ones
    ]

    pairs = [
        (a.id, b.id)
        for a, b in combinations(scenario.rays, 2)
        if a.vector != b.vector
    ]
    diagnostics = parallel_map(
        lambda pair: line_excluded(scenario, assignments, *pair), pairs
    )
    lines = [
        linalg.Subspace.span([diagnosis.line], 3)
        for diagnosis in diagnostics
        if not diagnosis.excluded
        and not any(plane.contains(diagnosis.line) for plane in planes)
    ]
    disagreements = sum(d.shortcut_disagrees for d in diagnostics)
    if disagreements:
        logger.warning(
            "%d pairs where the situation shortcut and the span test "
            "disagree",
            disagreements,
        )
    return _report(
        Method.SPECIALIZED_3D,
        assignments,
        planes + lines,
        diagnostics,
        all_ones,
    )


class _ChoiceSearch:
    """Search over one pick per assignment with rank pruning."""

    def __init__(self, picks, dimension):
        self.picks = picks
        self.dimension = dimension
        self.seen = set()
        self.leaves = {}

    def skip_covered(self, position, basis):
        """Advance past assignments already hit by the current span."""
        while position < len(self.picks) and any(
            basis.contains(u) for u in self.picks[position]
        ):
            position += 1
        return position

    def branches(self, position, basis):
        for u in self.picks[position]:
            grown = basis.extend(u)
            if grown.rank < self.dimension:
                yield grown

    def run(self, position, basis):
        position = self.skip_covered(position, basis)
        if position == len(self.picks):
            span = basis.subspace()
            self.leaves.setdefault(span.key, span)
            return
        state = (position, basis.subspace().key)
        if state in self.seen:
            return
        self.seen.add(state)
        for grown in self.branches(position, basis):
            self.run(position + 1, grown)


def decide_general(scenario, assignments):
    """Decide emptiness of the strongly contextual set in any dimension."""
    require_complete(scenario)
    if not assignments:
        return _report(Method.GENERAL, assignments, ())
    d = scenario.dimension
    picks = [_directions(scenario, a) for a in assignments]
    picks.sort(key=len)

    root = _ChoiceSearch(picks, d)
    start = linalg.EchelonBasis(d)
    position = root.skip_covered(0, start)
    if position == len(picks):
        spans = [start.subspace()]
    else:

        def subtree(grown):
            search = _ChoiceSearch(picks, d)
            search.run(position + 1, grown)
            return list(search.leaves.values())

        found = parallel_map(subtree, list(root.branches(position, start)))
        spans = [span for leaves in found for span in leaves]

    subspaces = [linalg.orthocomplement(span) for span in spans]
    return _report(
        Method.GENERAL,
        assignments,
        subspaces,
        all_ones=_common_directions(scenario, assignments),
    )
