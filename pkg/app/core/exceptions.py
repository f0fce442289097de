"""
Errors raised by the contextuality library.
"""


class ContextualityError(Exception):
    """Base class for every library error."""


class InputError(ContextualityError, ValueError):
    """The caller handed over something the library cannot work with."""


class ZeroVector(InputError):
    """A ray direction was the zero vector."""


class ZeroState(InputError):
    """A state vector was the zero vector."""


class DimensionMismatch(InputError):
    """Vectors of different lengths were combined."""


class ParallelRays(InputError):
    """Two rays point in the same direction."""


class DuplicateRay(InputError):
    """Two measurement rays canonicalize to the same vector."""


class UnknownFixture(InputError):
    """No built-in scenario with that name."""


class UnknownRayId(InputError):
    """A ray id does not belong to the scenario."""


class InvalidAssignment(InputError):
    """A valuation is partial or uses values outside {0, 1}."""


class InvalidScenario(InputError):
    """Rays and contexts do not form a measurement scenario."""


class IncompleteScenario(InputError):
    """Some context is not a full orthogonal basis."""


class NotThreeDimensional(InputError):
    """A three dimensional procedure was given another dimension."""


class InvariantViolation(ContextualityError, AssertionError):
    """An internal postcondition failed."""
