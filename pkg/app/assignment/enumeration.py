"""
Global assignments of a completed scenario.

A global assignment gives every ray the value 0 or 1 so that each
context has exactly one ray valued 1. Rays shared between contexts carry
one value everywhere.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import chain

from core.exceptions import (
    IncompleteScenario,
    InvalidAssignment,
    UnknownRayId,
)
from core.utils import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GlobalAssignment:
    """Total 0/1 valuation of the rays, indexed by ray id."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __getitem__(self, ray_id):
        return self.values[ray_id]

    @cached_property
    def ones(self):
        """The rays valued 1."""
        return frozenset(r for r, value in enumerate(self.values) if value)

    def choice(self, scenario):
        """The 1-valued ray of every context, in scenario order."""
        return tuple(
            next(r for r in context if self.values[r])
            for context in scenario.contexts
        )

    def as_mapping(self):
        return dict(enumerate(self.values))


def assignment_from_labels(scenario, labels):
    """Assignment valuing exactly the labelled rays 1."""
    ones = {scenario.by_label(str(label)).id for label in labels}
    return GlobalAssignment(
        1 if ray.id in ones else 0 for ray in scenario.rays
    )


def require_complete(scenario):
    """Raise IncompleteScenario unless every context is a full basis."""
    short = [
        scenario.context_labels(c)
        for c in scenario.contexts
        if len(c) < scenario.dimension
    ]
    if short:
        raise IncompleteScenario(
            f"{len(short)} contexts have fewer than {scenario.dimension} "
            f"rays, first {short[0]}; complete the scenario first."
        )


class _Search:
    """Depth-first search over contexts with forced-zero propagation."""

    def __init__(self, scenario, context_indices=None):
        if context_indices is None:
            context_indices = range(len(scenario.contexts))
        self.contexts = [scenario.contexts[i].ray_ids for i in context_indices]
        self.mates = scenario.mates
        self.size = len(scenario.rays)

    def root(self):
        return (None,) * self.size

    def assign(self, values, ray_id):
        """Value ray_id 1 and every ray sharing a context with it 0."""
        values = list(values)
        values[ray_id] = 1
        for mate in self.mates[ray_id]:
            values[mate] = 0
        return tuple(values)

    def pick(self, values):
        """Most constrained open context and its candidate rays.

        Returns None once every context holds a 1.
        """
        best = None
        for context in self.contexts:
            if any(values[r] == 1 for r in context):
                continue
            open_rays = [r for r in context if values[r] is None]
            if best is None or len(open_rays) < len(best):
                best = open_rays
                if not best:
                    break
        return best

    def walk(self, values):
        """Yield every completed valuation below values."""
        candidates = self.pick(values)
        if candidates is None:
            yield values
            return
        for ray_id in sorted(candidates):
            yield from self.walk(self.assign(values, ray_id))

    def count(self, values):
        return sum(1 for _ in self.walk(values))


def enumerate_assignments(scenario):
    """All global assignments of a completed scenario, in canonical order.

    Rows are ordered by the tuple of 1-valued ray ids chosen in each
    context, contexts taken in scenario order.
    """
    require_complete(scenario)
    search = _Search(scenario)
    root = search.root()
    candidates = search.pick(root)
    if candidates is None:
        branches = [[root]]
    else:
        branches = parallel_map(
            lambda ray_id: list(search.walk(search.assign(root, ray_id))),
            sorted(candidates),
        )
    assignments = [GlobalAssignment(v) for v in chain.from_iterable(branches)]
    assignments.sort(key=lambda a: a.choice(scenario))
    logger.info("Found %d global assignments", len(assignments))
    return assignments


def _components(scenario):
    """Groups of contexts connected through shared rays."""
    parent = list(range(len(scenario.contexts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for owners in scenario.contexts_of.values():
        for other in owners[1:]:
            parent[find(other)] = find(owners[0])
    groups = {}
    for index in range(len(scenario.contexts)):
        groups.setdefault(find(index), []).append(index)
    return list(groups.values())


def count_assignments(scenario):
    """Number of global assignments, multiplied out over components."""
    require_complete(scenario)
    total = 1
    for component in _components(scenario):
        search = _Search(scenario, component)
        total *= search.count(search.root())
        if not total:
            break
    return total


def verify_assignment(scenario, assignment):
    """True iff every context has exactly one ray valued 1.

    Accepts a GlobalAssignment or a mapping from ray id to value.
    """
    if isinstance(assignment, GlobalAssignment):
        values = assignment.as_mapping()
    else:
        values = dict(assignment)
    size = len(scenario.rays)
    unknown = [
        r for r in values if not isinstance(r, int) or not 0 <= r < size
    ]
    if unknown:
        raise UnknownRayId(f"Ray ids {unknown} are not in the scenario.")
    if len(values) != size:
        raise InvalidAssignment(
            f"The valuation covers {len(values)} of {size} rays."
        )
    if any(value not in (0, 1) for value in values.values()):
        raise InvalidAssignment("Values must be 0 or 1.")
    return all(
        sum(values[r] for r in context) == 1 for context in scenario.contexts
    )
