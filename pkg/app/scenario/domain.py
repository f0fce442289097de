"""
Measurement scenarios: rays, contexts and context completion.
"""

import enum
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import networkx as nx

from core import linalg
from core.exceptions import (
    DimensionMismatch,
    DuplicateRay,
    InvalidScenario,
    UnknownRayId,
)

logger = logging.getLogger(__name__)


class Origin(str, enum.Enum):
    """Where the contexts of a scenario came from."""

    EXPLICIT = "explicit"
    DERIVED = "derived"


@dataclass(frozen=True)
class Ray:
    """A measurement: a labelled ray, possibly added by completion."""

    id: int
    label: str
    vector: linalg.RayVector
    synthetic: bool = False
    given: tuple = None

    @property
    def given_coords(self):
        """Coordinates as written in the source, else the canonical ones."""
        if self.given is not None:
            return self.given
        return self.vector.coords


@dataclass(frozen=True)
class Context:
    """Ordered set of mutually orthogonal rays."""

    ray_ids: tuple

    def __post_init__(self):
        object.__setattr__(self, "ray_ids", tuple(self.ray_ids))

    def __len__(self):
        return len(self.ray_ids)

    def __iter__(self):
        return iter(self.ray_ids)

    def __contains__(self, ray_id):
        return ray_id in self.ray_ids


@dataclass(frozen=True)
class Scenario:
    """Measurement scenario (M, C) over real rays of one dimension."""

    dimension: int
    rays: tuple
    contexts: tuple
    origin: Origin = Origin.EXPLICIT
    completion_labels: tuple = ()
    quoted_completions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(self.rays))
        object.__setattr__(self, "contexts", tuple(self.contexts))
        object.__setattr__(
            self, "completion_labels", tuple(self.completion_labels)
        )
        object.__setattr__(
            self,
            "quoted_completions",
            tuple(
                (label, tuple(coords))
                for label, coords in self.quoted_completions
            ),
        )

    def ray(self, ray_id):
        if not 0 <= ray_id < len(self.rays):
            raise UnknownRayId(f"Ray id {ray_id} is not in the scenario.")
        return self.rays[ray_id]

    def vector(self, ray_id):
        return self.ray(ray_id).vector

    @cached_property
    def ids_by_label(self):
        return {ray.label: ray.id for ray in self.rays}

    def by_label(self, label):
        try:
            return self.rays[self.ids_by_label[label]]
        except KeyError:
            raise UnknownRayId(f"No ray is labelled {label!r}.") from None

    @property
    def labels(self):
        return [ray.label for ray in self.rays]

    @property
    def is_complete(self):
        return all(len(c) == self.dimension for c in self.contexts)

    @cached_property
    def contexts_of(self):
        """Indices of the contexts each ray belongs to."""
        found = {ray.id: [] for ray in self.rays}
        for index, context in enumerate(self.contexts):
            for ray_id in context:
                found[ray_id].append(index)
        return {ray_id: tuple(idx) for ray_id, idx in found.items()}

    @cached_property
    def mates(self):
        """Rays sharing at least one context with each ray."""
        found = {ray.id: set() for ray in self.rays}
        for context in self.contexts:
            for ray_id in context:
                found[ray_id].update(r for r in context if r != ray_id)
        return {ray_id: frozenset(m) for ray_id, m in found.items()}

    def context_labels(self, context):
        return [self.rays[ray_id].label for ray_id in context]


def make_rays(entries, dimension=None):
    """Build rays from (label, coords[, synthetic]) entries.

    Coordinates may be integers, fractions or their string forms. The
    written coordinates are kept on the ray next to the canonical vector.
    """
    rays = []
    for ray_id, entry in enumerate(entries):
        label, coords, *rest = entry
        given = tuple(Fraction(a) for a in coords)
        if dimension is not None and len(given) != dimension:
            raise DimensionMismatch(
                f"Ray {label!r} has {len(given)} coordinates, "
                f"expected {dimension}."
            )
        rays.append(
            Ray(
                id=ray_id,
                label=str(label),
                vector=linalg.canonicalize(given),
                synthetic=bool(rest[0]) if rest else False,
                given=given,
            )
        )
    return rays


def build_orthogonality_graph(rays):
    """Orthogonality graph over the non-synthetic rays."""
    graph = nx.Graph()
    seen = {}
    for ray in rays:
        if ray.synthetic:
            continue
        if ray.vector in seen:
            raise DuplicateRay(
                f"Rays {seen[ray.vector]!r} and {ray.label!r} are parallel."
            )
        seen[ray.vector] = ray.label
        graph.add_node(ray.id)
    measured = [ray for ray in rays if not ray.synthetic]
    for a, b in combinations(measured, 2):
        if linalg.dot(a.vector, b.vector) == 0:
            graph.add_edge(a.id, b.id)
    return graph


def derive_contexts(graph):
    """Maximal cliques of an orthogonality graph, in lexicographic order."""
    cliques = sorted(tuple(sorted(c)) for c in nx.find_cliques(graph))
    return [Context(c) for c in cliques]


def _validate(scenario):
    """Check the structural invariants of a scenario."""
    d = scenario.dimension
    if d < 1:
        raise InvalidScenario("The dimension must be positive.")
    if not scenario.rays:
        raise InvalidScenario("A scenario needs at least one ray.")
    if not scenario.contexts:
        raise InvalidScenario("A scenario needs at least one context.")
    labels = [ray.label for ray in scenario.rays]
    duplicated = sorted({x for x in labels if labels.count(x) > 1})
    if duplicated:
        raise InvalidScenario(f"Duplicate ray labels: {duplicated}.")
    for ray in scenario.rays:
        if ray.vector.dimension != d:
            raise DimensionMismatch(
                f"Ray {ray.label!r} is not {d}-dimensional."
            )
    build_orthogonality_graph(scenario.rays)

    for context in scenario.contexts:
        if not context.ray_ids:
            raise InvalidScenario("Contexts cannot be empty.")
        for ray_id in context:
            scenario.ray(ray_id)
        if len(set(context.ray_ids)) != len(context):
            raise InvalidScenario(
                f"Context {scenario.context_labels(context)} repeats a ray."
            )
        if len(context) > d:
            raise InvalidScenario(
                f"Context {scenario.context_labels(context)} has more than "
                f"{d} rays."
            )
        for a, b in combinations(context, 2):
            if linalg.dot(scenario.vector(a), scenario.vector(b)) != 0:
                raise InvalidScenario(
                    f"Rays {scenario.rays[a].label!r} and "
                    f"{scenario.rays[b].label!r} share a context but are "
                    "not orthogonal."
                )

    for ray in scenario.rays:
        owners = scenario.contexts_of[ray.id]
        if not owners:
            raise InvalidScenario(f"Ray {ray.label!r} is in no context.")
        if ray.synthetic and len(owners) != 1:
            raise InvalidScenario(
                f"Synthetic ray {ray.label!r} must be in exactly one context."
            )
    return scenario


def build_scenario(
    dimension,
    ray_specs,
    contexts=None,
    completion_labels=(),
    quoted_completions=(),
):
    """Build and validate a scenario from labelled rays.

    `contexts` is a list of label lists. When it is None the contexts are
    the maximal cliques of the orthogonality graph. `quoted_completions`
    pairs completion labels with coordinates to keep as written when
    completion lands on the same direction.
    """
    rays = make_rays(ray_specs, dimension)
    if contexts is None:
        found = derive_contexts(build_orthogonality_graph(rays))
        origin = Origin.DERIVED
    else:
        ids = {ray.label: ray.id for ray in rays}
        found = []
        for labels in contexts:
            missing = [x for x in labels if str(x) not in ids]
            if missing:
                raise UnknownRayId(f"Unknown ray labels in context: {missing}")
            found.append(Context(ids[str(x)] for x in labels))
        origin = Origin.EXPLICIT
    scenario = Scenario(
        dimension=dimension,
        rays=rays,
        contexts=found,
        origin=origin,
        completion_labels=completion_labels,
        quoted_completions=quoted_completions,
    )
    return _validate(scenario)


def _label_source(scenario):
    """Yield labels for new synthetic rays."""
    used = set(scenario.labels)
    for label in scenario.completion_labels:
        if label not in used:
            used.add(label)
            yield label
    counter = 0
    while True:
        counter += 1
        label = f"s{counter}"
        if label not in used:
            used.add(label)
            yield label


def complete_contexts(scenario):
    """Complete every deficient context to an orthogonal basis.

    A context missing k rays gains k mutually orthogonal synthetic rays
    spanning its orthogonal complement. Synthetic rays belong to that one
    context only and take part in no other orthogonality relation.
    """
    if scenario.is_complete:
        return scenario
    d = scenario.dimension
    rays = list(scenario.rays)
    contexts = []
    labels = _label_source(scenario)
    quoted = dict(scenario.quoted_completions)
    for context in scenario.contexts:
        members = list(context.ray_ids)
        while len(members) < d:
            span = linalg.Subspace.span(
                [rays[r].vector for r in members], d
            )
            direction = linalg.orthocomplement(span).basis[0]
            label = next(labels)
            given = None
            if label in quoted:
                coords = tuple(Fraction(a) for a in quoted[label])
                if linalg.canonicalize(coords) == direction:
                    given = coords
            ray = Ray(
                id=len(rays),
                label=label,
                vector=direction,
                synthetic=True,
                given=given,
            )
            rays.append(ray)
            members.append(ray.id)
            logger.debug(
                "Completed context %s with %s = %s",
                scenario.context_labels(context),
                label,
                direction,
            )
        contexts.append(Context(members))
    used = {ray.label for ray in rays}
    completed = replace(
        scenario,
        rays=rays,
        contexts=contexts,
        completion_labels=tuple(
            x for x in scenario.completion_labels if x not in used
        ),
    )
    logger.info(
        "Added %d synthetic rays", len(rays) - len(scenario.rays)
    )
    return _validate(completed)


def compare_with_derived(scenario):
    """Compare explicit contexts with the maximal orthogonality cliques.

    Synthetic rays are left out of both sides. Returns the derived
    cliques missing from the scenario and the scenario contexts that are
    not derived cliques, each as sorted tuples of ray ids.
    """
    derived = {
        c.ray_ids
        for c in derive_contexts(build_orthogonality_graph(scenario.rays))
    }
    explicit = {
        tuple(sorted(r for r in c if not scenario.rays[r].synthetic))
        for c in scenario.contexts
    }
    return sorted(derived - explicit), sorted(explicit - derived)
