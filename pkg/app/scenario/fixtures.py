"""
Built-in scenarios.
"""

from core.exceptions import UnknownFixture
from scenario.domain import build_scenario

YU_OH_RAYS = [
    ("1", (1, 0, 0)),
    ("2", (0, 1, 0)),
    ("3", (0, 0, 1)),
    ("4", (0, 1, -1)),
    ("5", (1, 0, -1)),
    ("6", (1, -1, 0)),
    ("7", (0, 1, 1)),
    ("8", (1, 0, 1)),
    ("9", (1, 1, 0)),
    ("A", (-1, 1, 1)),
    ("B", (1, -1, 1)),
    ("C", (1, 1, -1)),
    ("D", (1, 1, 1)),
]

# Completion rays in the sign convention they are usually quoted in.
YU_OH_COMPLETION = [
    ("1'", (2, 1, 1)),
    ("2'", (-1, -2, 1)),
    ("3'", (1, -1, 2)),
    ("4'", (-1, -2, -1)),
    ("5'", (2, 1, -1)),
    ("6'", (1, -1, -2)),
    ("7'", (1, 1, 2)),
    ("8'", (-2, 1, -1)),
    ("9'", (-1, 2, 1)),
    ("10'", (2, -1, -1)),
    ("11'", (1, -2, 1)),
    ("12'", (-1, -1, 2)),
]

YU_OH_CONTEXTS = [
    ["1", "2", "3"],
    ["1", "4", "7"],
    ["2", "5", "8"],
    ["3", "6", "9"],
    ["4", "A"],
    ["8", "A"],
    ["9", "A"],
    ["5", "B"],
    ["7", "B"],
    ["9", "B"],
    ["6", "C"],
    ["7", "C"],
    ["8", "C"],
    ["4", "D"],
    ["5", "D"],
    ["6", "D"],
]

CABELLO_18_CONTEXTS = [
    [(0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 0), (1, -1, 0, 0)],
    [(0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0)],
    [(1, -1, 1, -1), (1, -1, -1, 1), (1, 1, 0, 0), (0, 0, 1, 1)],
    [(1, -1, 1, -1), (1, 1, 1, 1), (1, 0, -1, 0), (0, 1, 0, -1)],
    [(0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 1), (1, 0, 0, -1)],
    [(1, -1, -1, 1), (1, 1, 1, 1), (1, 0, 0, -1), (0, 1, -1, 0)],
    [(1, 1, -1, 1), (1, 1, 1, -1), (1, -1, 0, 0), (0, 0, 1, 1)],
    [(1, 1, -1, 1), (-1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, -1)],
    [(1, 1, 1, -1), (-1, 1, 1, 1), (1, 0, 0, 1), (0, 1, -1, 0)],
]


def yu_oh():
    """The 13 Yu-Oh rays in d = 3 with their 16 contexts."""
    return build_scenario(
        3,
        YU_OH_RAYS,
        YU_OH_CONTEXTS,
        completion_labels=[label for label, _ in YU_OH_COMPLETION],
        quoted_completions=YU_OH_COMPLETION,
    )


def yu_oh_completed():
    """Yu-Oh with every two-ray context completed by a synthetic ray."""
    rays = YU_OH_RAYS + [
        (label, coords, True) for label, coords in YU_OH_COMPLETION
    ]
    contexts = [
        members + ([label] if len(members) == 2 else [])
        for members, label in zip(
            YU_OH_CONTEXTS,
            [None] * 4 + [label for label, _ in YU_OH_COMPLETION],
        )
    ]
    return build_scenario(3, rays, contexts)


def cabello_18():
    """The 18-vector, 9-context Kochen-Specker set in d = 4.

    Every ray lies in exactly two of the nine contexts, so no global
    assignment exists.
    """
    rays = []
    labels = {}
    contexts = []
    for members in CABELLO_18_CONTEXTS:
        context = []
        for coords in members:
            if coords not in labels:
                labels[coords] = str(len(labels) + 1)
                rays.append((labels[coords], coords))
            context.append(labels[coords])
        contexts.append(context)
    return build_scenario(4, rays, contexts)


FIXTURES = {
    "yu-oh": yu_oh,
    "yu-oh-completed": yu_oh_completed,
    "cabello-18": cabello_18,
}


def load_fixture(name):
    """Return the built-in scenario called name."""
    try:
        factory = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(
            f"Unknown fixture {name!r}; choose one of {sorted(FIXTURES)}."
        ) from None
    return factory()
