"""Subsets of a space and the Pompeiu-Hausdorff semi-metric between them.

A PointSet is a sorted tuple of point indices.  A Family is the finite,
validated stand-in for the collection of nonempty closed bounded subsets:
either an explicit named list or the full power set.  All sups and infs are
over finite sets, so they are plain max/min and always attained.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ValidationError, Violation
from .space import SemiMetricSpace
from .values import EXACT, Number

PointSet = tuple[int, ...]

POWERSET_HARD_CAP = 12
POWERSET_WARN_ABOVE = 10


def point_set(space: SemiMetricSpace, labels: Iterable) -> PointSet:
    """Sorted, deduplicated index tuple for a collection of point labels."""
    idxs = sorted({space.index(p) for p in labels})
    return tuple(idxs)


def set_labels(space: SemiMetricSpace, A: PointSet) -> tuple:
    return tuple(space.points[i] for i in A)


def point_to_set_distance(space: SemiMetricSpace, x: int, A: PointSet) -> Number:
    """Smallest distance from point index x to the nonempty set A."""
    if not A:
        raise ValueError("distance to an empty set is undefined")
    row = space.dist[x]
    return min(row[a] for a in A)


def directed_excess(space: SemiMetricSpace, A: PointSet, B: PointSet) -> Number:
    """How far A sticks out of B: the largest point-to-set distance."""
    if not A or not B:
        raise ValueError("directed excess needs nonempty sets")
    dist = space.dist
    return max(min(dist[a][b] for b in B) for a in A)


def hausdorff(space: SemiMetricSpace, A: PointSet, B: PointSet) -> Number:
    """Pompeiu-Hausdorff semi-metric: max of the two directed excesses."""
    return max(directed_excess(space, A, B), directed_excess(space, B, A))


def closure(space: SemiMetricSpace, U: PointSet) -> PointSet:
    """Points at zero (sub-tolerance) distance from U."""
    if not U:
        raise ValueError("closure of an empty set is undefined")
    return tuple(i for i in range(space.size)
                 if space.is_zero(point_to_set_distance(space, i, U)))


def is_closed(space: SemiMetricSpace, U: PointSet) -> bool:
    return closure(space, U) == tuple(sorted(U))


def nadler_select(space: SemiMetricSpace, U: PointSet, V: PointSet,
                  mu: Number) -> dict[int, int]:
    """For each u in U pick v in V with d(u, v) <= mu * H(U, V), mu > 1.

    The pick minimizes d(u, v) and breaks ties by smallest point index, so
    outputs are deterministic.  The bound always admits a choice: the best
    v satisfies d(u, V) <= H(U, V) < mu * H(U, V) whenever H > 0, and
    equals 0 = mu * 0 when H = 0 (then u itself is within any tolerance).
    """
    if mu <= 1:
        raise ValueError(f"selection factor must exceed 1, got {mu}")
    if not U or not V:
        raise ValueError("selection needs nonempty sets")
    bound = mu * hausdorff(space, U, V)
    dist = space.dist
    chosen: dict[int, int] = {}
    for u in U:
        row = dist[u]
        best = min(V, key=lambda v: (row[v], v))
        if row[best] > bound:
            raise AssertionError(
                f"selection bound violated at point {space.points[u]}: "
                f"{row[best]} > {bound}")
        chosen[u] = best
    return chosen


@dataclass(frozen=True)
class Family:
    """A named collection of nonempty closed subsets, or the full power set."""

    names: tuple[str, ...]
    members: tuple[PointSet, ...]
    mode: str = "explicit"  # "explicit" | "powerset"

    def __post_init__(self):
        object.__setattr__(self, "_by_name",
                           {n: i for i, n in enumerate(self.names)})

    def __len__(self) -> int:
        return len(self.members)

    def index(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown family member: {name!r}") from None

    def member(self, name: str) -> PointSet:
        return self.members[self.index(name)]


def powerset_names(space: SemiMetricSpace) -> tuple[tuple[str, PointSet], ...]:
    """All nonempty subsets in bitmask order, with canonical "{a,b}" names."""
    n = space.size
    out = []
    for mask in range(1, 1 << n):
        idxs = tuple(i for i in range(n) if mask >> i & 1)
        name = "{" + ",".join(str(space.points[i]) for i in idxs) + "}"
        out.append((name, idxs))
    return tuple(out)


def validate_family(space: SemiMetricSpace,
                    named_sets: Optional[dict[str, Sequence]] = None,
                    powerset: bool = False) -> Family:
    """Build and check a Family.

    Explicit mode checks nonemptiness, closedness and pairwise distinctness
    of the named sets.  Powerset mode generates all 2^n - 1 nonempty subsets
    (hard cap n <= 12; warning above 10, where pair scans get expensive).
    """
    if powerset:
        if space.size > POWERSET_HARD_CAP:
            raise ValidationError([Violation(
                "powerset_cap", (space.size,),
                f"power set refused for {space.size} points (cap {POWERSET_HARD_CAP})")])
        if space.size > POWERSET_WARN_ABOVE:
            warnings.warn(
                f"power set over {space.size} points has {2 ** space.size - 1} "
                "members; pair scans will be slow", stacklevel=2)
        entries = powerset_names(space)
        return Family(tuple(n for n, _ in entries),
                      tuple(m for _, m in entries), mode="powerset")

    if not named_sets:
        raise ValidationError([Violation("empty_family", (), "no members given")])
    violations: list[Violation] = []
    names: list[str] = []
    members: list[PointSet] = []
    seen: dict[PointSet, str] = {}
    for name, labels in named_sets.items():
        try:
            m = point_set(space, labels)
        except KeyError as e:
            violations.append(Violation("unknown_point", (name,), str(e)))
            continue
        if not m:
            violations.append(Violation("empty_member", (name,), "member has no points"))
            continue
        if m in seen:
            violations.append(Violation(
                "duplicate_member", (name,), f"same point set as {seen[m]!r}"))
            continue
        if space.mode != EXACT and not is_closed(space, m):
            extra = set_labels(space, tuple(set(closure(space, m)) - set(m)))
            violations.append(Violation(
                "unclosed_member", (name,), f"closure adds points {extra}"))
            continue
        seen[m] = name
        names.append(name)
        members.append(m)
    if violations:
        raise ValidationError(violations)
    return Family(tuple(names), tuple(members), mode="explicit")


def ph_matrix(space: SemiMetricSpace, family: Family) -> tuple[tuple[Number, ...], ...]:
    """Pompeiu-Hausdorff distances between all family members, built once.

    Symmetric with zero diagonal; in exact mode an off-diagonal zero is
    impossible because members are distinct closed sets.
    """
    k = len(family.members)
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            h = hausdorff(space, family.members[i], family.members[j])
            rows[i][j] = h
            rows[j][i] = h
    return tuple(tuple(r) for r in rows)
