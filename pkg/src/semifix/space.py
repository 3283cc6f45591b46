"""Finite semi-metric spaces.

A semi-metric satisfies symmetry and "zero iff equal" but is *not* required
to satisfy the triangle inequality, and nothing in this package assumes it.
Spaces here are finite: an ordered tuple of distinct opaque labels plus a
square distance matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ValidationError, Violation
from .values import DEFAULT_TOLERANCE, EXACT, FLOAT, INF, Number


@dataclass(frozen=True)
class SemiMetricSpace:
    """A finite point set with a symmetric, zero-diagonal distance matrix.

    ``points`` are opaque labels; all internal APIs speak in point indices
    (positions in ``points``).  ``mode`` is "exact" (int/Fraction entries)
    or "float" (float entries compared against ``tolerance``).
    """

    points: tuple
    dist: tuple[tuple[Number, ...], ...]
    mode: str = EXACT
    tolerance: Optional[float] = None
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.points)})

    @property
    def size(self) -> int:
        return len(self.points)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown point label: {label!r}") from None

    def label(self, i: int):
        return self.points[i]

    def d(self, i: int, j: int) -> Number:
        """Distance between point indices."""
        return self.dist[i][j]

    def distance(self, x, y) -> Number:
        """Distance between point labels."""
        return self.dist[self.index(x)][self.index(y)]

    def is_zero(self, v: Number) -> bool:
        if self.mode == FLOAT:
            return abs(v) < self.tolerance
        return v == 0

    def values_equal(self, a: Number, b: Number) -> bool:
        return self.is_zero(a - b)

    @property
    def max_distance(self) -> Number:
        """The finite bound attained by some pair (0 on one-point spaces)."""
        return max(v for row in self.dist for v in row)

    def min_positive_distance(self) -> Number:
        """Smallest off-diagonal distance; INF sentinel on one-point spaces."""
        n = self.size
        if n < 2:
            return INF
        return min(self.dist[i][j] for i in range(n) for j in range(n) if i != j)

    def open_ball(self, center, rho: Number) -> tuple:
        """Labels strictly closer than ``rho`` to ``center``; always has center."""
        if rho <= 0:
            raise ValueError(f"ball radius must be positive, got {rho}")
        c = self.index(center)
        return tuple(p for i, p in enumerate(self.points) if self.dist[c][i] < rho)


def check_matrix(matrix: Sequence[Sequence[Number]], mode: str = EXACT,
                 tolerance: Optional[float] = None) -> list[Violation]:
    """Collect every axiom violation in a candidate distance matrix.

    Checked cell by cell: square shape, nonnegativity, zero diagonal,
    positive off-diagonal, symmetry.  An empty list means the matrix is a
    valid semi-metric.
    """
    tol = tolerance if tolerance is not None else (DEFAULT_TOLERANCE if mode == FLOAT else 0.0)
    n = len(matrix)
    out: list[Violation] = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            out.append(Violation("square_shape", (i,),
                                 f"row {i} has {len(row)} entries, expected {n}"))
    if out:
        return out

    def zero(v):
        return abs(v) < tol if mode == FLOAT else v == 0

    for i in range(n):
        for j in range(n):
            v = matrix[i][j]
            if isinstance(v, float) and not math.isfinite(v):
                out.append(Violation("finiteness", (i, j), f"non-finite entry {v}"))
            elif v < 0:
                out.append(Violation("nonnegativity", (i, j), f"negative entry {v}"))
            elif i == j and not zero(v):
                out.append(Violation("identity_of_indiscernibles", (i, j),
                                     f"nonzero diagonal entry {v}"))
            elif i != j and zero(v):
                out.append(Violation("identity_of_indiscernibles", (i, j),
                                     "zero distance between distinct points"))
            if j > i:
                a, b = matrix[i][j], matrix[j][i]
                symmetric = abs(a - b) < tol if mode == FLOAT else a == b
                if not symmetric:
                    out.append(Violation("symmetry", (i, j), f"{a} != {b}"))
    return out


def validate_space(points: Sequence, matrix: Sequence[Sequence[Number]],
                   mode: str = EXACT, tolerance: Optional[float] = None) -> SemiMetricSpace:
    """Build a SemiMetricSpace, raising ValidationError with all violations.

    One-point spaces are accepted (every result about them is trivial).
    """
    violations: list[Violation] = []
    if len(set(points)) != len(points):
        violations.append(Violation("distinct_labels", (), "duplicate point labels"))
    if len(matrix) != len(points):
        violations.append(Violation("square_shape", (),
                                    f"{len(matrix)} rows for {len(points)} points"))
    if not violations:
        violations = check_matrix(matrix, mode, tolerance)
    if violations:
        raise ValidationError(violations)
    if mode == FLOAT:
        tol = tolerance if tolerance is not None else DEFAULT_TOLERANCE
        dist = tuple(tuple(float(v) for v in row) for row in matrix)
        return SemiMetricSpace(tuple(points), dist, FLOAT, tol)
    dist = tuple(tuple(row) for row in matrix)
    return SemiMetricSpace(tuple(points), dist, EXACT, None)


def space_from_squared_difference(points: Sequence) -> SemiMetricSpace:
    """The squared-difference semi-metric d(x, y) = (x - y)^2 on numeric labels.

    The classic source of triangle-inequality failures: d(0,4)=16 while
    d(0,1)+d(1,4)=10.
    """
    matrix = [[(x - y) ** 2 for y in points] for x in points]
    return validate_space(points, matrix)


@dataclass(frozen=True)
class OrbitDiagnostics:
    """Tail behaviour of a finite point sequence.

    ``is_cauchy_tail``: some suffix has all pairwise distances zero (exact)
    or below tolerance (float).  ``converged``: distances to ``limit`` reach
    zero and stay there.  On exact finite spaces both coincide with the
    sequence being eventually constant.
    """

    is_cauchy_tail: bool
    limit: Optional[object]
    converged: bool

    def __post_init__(self):
        if self.converged and self.limit is None:
            raise ValueError("converged diagnostics must carry a limit")


def orbit_diagnostics(space: SemiMetricSpace, sequence: Sequence,
                      candidate_limit=None) -> OrbitDiagnostics:
    """Classify a finite sequence of point labels.

    With no candidate limit, the last element is tried.  Convergence means:
    from some index on, every distance to the limit is zero/below tolerance.
    """
    if not sequence:
        raise ValueError("empty sequence")
    idxs = [space.index(p) for p in sequence]
    n = len(idxs)

    # a one-element suffix is vacuously mutually close, so the tail must
    # contain at least one genuine pair (whole sequences of length one are
    # trivially Cauchy)
    cauchy = n == 1
    for start in range(n - 1):
        tail = idxs[start:]
        if all(space.is_zero(space.d(a, b)) for a in tail for b in tail):
            cauchy = True
            break

    limit_label = candidate_limit if candidate_limit is not None else sequence[-1]
    li = space.index(limit_label)
    converged = False
    for start in range(n):
        if all(space.is_zero(space.d(a, li)) for a in idxs[start:]):
            converged = True
            break

    return OrbitDiagnostics(is_cauchy_tail=cauchy,
                            limit=limit_label if converged else None,
                            converged=converged)
