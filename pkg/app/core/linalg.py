"""
Exact linear algebra over integer ray directions.

Everything here works on Python integers. Rational input is scaled to
integers on the way in, and elimination is done fraction-free, so no
result ever depends on a floating point tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from core.exceptions import (
    DimensionMismatch,
    InputError,
    ParallelRays,
    ZeroVector,
)


def _coords(v):
    """Return the coordinate tuple of a RayVector or a plain sequence."""
    if isinstance(v, RayVector):
        return v.coords
    return tuple(v)


def _content(row):
    """Gcd of the absolute values of an integer row (0 for a zero row)."""
    return reduce(gcd, row, 0)


def _primitive(row):
    """Divide an integer row by its content, keeping its sign."""
    g = _content(row)
    if g in (0, 1):
        return list(row)
    return [a // g for a in row]


@dataclass(frozen=True, order=True)
class RayVector:
    """Direction of a ray in canonical primitive integer form."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        if not any(coords):
            raise ZeroVector("The zero vector is not a ray.")
        if not all(isinstance(a, int) for a in coords):
            raise InputError(f"{coords} has non-integer coordinates.")
        leading = next(a for a in coords if a)
        if _content(coords) != 1 or leading < 0:
            raise InputError(f"{coords} is not in canonical form.")

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.coords) + ")"

    @property
    def dimension(self):
        return len(self.coords)

    @property
    def norm2(self):
        return dot(self, self)


def canonicalize(v):
    """Return the canonical representative of the ray through v."""
    values = [Fraction(a) for a in _coords(v)]
    if not any(values):
        raise ZeroVector("The zero vector is not a ray.")
    scale = reduce(lcm, (a.denominator for a in values), 1)
    row = _primitive([int(a * scale) for a in values])
    if next(a for a in row if a) < 0:
        row = [-a for a in row]
    return RayVector(tuple(row))


def dot(a, b):
    """Exact real inner product."""
    a, b = _coords(a), _coords(b)
    if len(a) != len(b):
        raise DimensionMismatch(
            f"Cannot combine vectors of length {len(a)} and {len(b)}."
        )
    return sum(x * y for x, y in zip(a, b))


def cross3(a, b):
    """Canonical ray orthogonal to two non-parallel 3D rays."""
    a, b = _coords(a), _coords(b)
    if len(a) != 3 or len(b) != 3:
        raise DimensionMismatch("cross3 needs two three dimensional vectors.")
    c = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    if not any(c):
        raise ParallelRays(f"{a} and {b} are parallel.")
    return canonicalize(c)


def _check_rows(rows, ncols=None):
    """Return rows as integer lists of one common length."""
    rows = [list(_coords(r)) for r in rows]
    lengths = {len(r) for r in rows}
    if ncols is not None:
        lengths.add(ncols)
    if len(lengths) > 1:
        raise DimensionMismatch(
            f"Rows of lengths {sorted(lengths)} cannot be combined."
        )
    return rows


def matrix_rank(rows):
    """Rank of an integer matrix by Bareiss fraction-free elimination."""
    m = _check_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    previous = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            f = m[i][col]
            for j in range(col + 1, ncols):
                # Sylvester's identity keeps this division exact.
                m[i][j] = (p * m[i][j] - f * m[rank][j]) // previous
            m[i][col] = 0
        previous = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(vectors):
    """Rank of the subspace spanned by a list of rays."""
    return matrix_rank(vectors)


def reduced_rows(rows, ncols):
    """Reduced echelon form with primitive rows and positive pivots.

    Returns the nonzero rows and their pivot columns. Every row is the
    positive multiple of the corresponding rational reduced row echelon
    row that makes it primitive, so the result depends only on the row
    space.
    """
    m = [row for row in _check_rows(rows, ncols) if any(row)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        row = _primitive(m[r])
        if row[col] < 0:
            row = [-a for a in row]
        m[r] = row
        p = row[col]
        for i in range(len(m)):
            f = m[i][col]
            if i != r and f:
                m[i] = _primitive([p * a - f * b for a, b in zip(m[i], row)])
        pivots.append(col)
        r += 1
    return m[:r], pivots


def nullspace(rows, ncols):
    """Canonical basis of the integer vectors orthogonal to every row."""
    reduced, pivots = reduced_rows(rows, ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        scale = reduce(lcm, (row[c] for row, c in zip(reduced, pivots)), 1)
        x = [0] * ncols
        x[free] = scale
        for row, c in zip(reduced, pivots):
            x[c] = -row[free] * scale // row[c]
        basis.append(canonicalize(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """Subspace of the real coordinate space, held by an exact basis."""

    basis: tuple
    ambient_dim: int

    def __post_init__(self):
        basis = tuple(self.basis)
        object.__setattr__(self, "basis", basis)
        if self.ambient_dim < 1:
            raise InputError("The ambient dimension must be positive.")
        if any(v.dimension != self.ambient_dim for v in basis):
            raise DimensionMismatch(
                f"Basis vectors must have length {self.ambient_dim}."
            )
        if matrix_rank(basis) != len(basis):
            raise InputError("Basis vectors are linearly dependent.")

    @classmethod
    def span(cls, vectors, ambient_dim):
        """Subspace spanned by any list of vectors, in canonical basis."""
        rows, _ = reduced_rows(vectors, ambient_dim)
        return cls(tuple(canonicalize(r) for r in rows), ambient_dim)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def key(self):
        """Hashable value equal for equal subspaces."""
        return Subspace.span(self.basis, self.ambient_dim).basis

    def contains(self, x):
        return in_span(x, self)


def in_span(x, s):
    """True iff x lies in the subspace s."""
    x = _coords(x)
    if len(x) != s.ambient_dim:
        raise DimensionMismatch(
            f"A vector of length {len(x)} is not in a space of dimension "
            f"{s.ambient_dim}."
        )
    return matrix_rank(list(s.basis) + [x]) == s.rank


def orthocomplement(s):
    """Orthogonal complement of s, in canonical basis."""
    return Subspace.span(
        nullspace(s.basis, s.ambient_dim), s.ambient_dim
    )


class EchelonBasis:
    """Growing list of independent rows kept in echelon form.

    Cheap membership tests for a span that is built one vector at a time.
    Instances are immutable; `extend` returns a new one.
    """

    def __init__(self, ambient_dim, rows=()):
        self.ambient_dim = ambient_dim
        self._rows = tuple(rows)

    @property
    def rank(self):
        return len(self._rows)

    def _reduce(self, v):
        x = list(_coords(v))
        if len(x) != self.ambient_dim:
            raise DimensionMismatch(
                f"Expected a vector of length {self.ambient_dim}."
            )
        for col, row in self._rows:
            f = x[col]
            if f:
                x = _primitive([row[col] * a - f * b for a, b in zip(x, row)])
        return x

    def contains(self, v):
        return not any(self._reduce(v))

    def extend(self, v):
        """Return a basis that also spans v (self if v already lies in it)."""
        x = self._reduce(v)
        if not any(x):
            return self
        col = next(i for i, a in enumerate(x) if a)
        return EchelonBasis(self.ambient_dim, self._rows + ((col, x),))

    def subspace(self):
        return Subspace.span(
            [row for _, row in self._rows], self.ambient_dim
        )
