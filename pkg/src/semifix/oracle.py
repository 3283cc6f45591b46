"""Brute-force reference implementations and random instance generation.

Everything here is written to be obviously correct rather than fast: naive
loops, no caching, no shared code with the fast paths it cross-checks.  The
generator draws distinct integer distances so every instance stays in exact
arithmetic and oracle comparisons are literal equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .contraction import SetMap
from .graph import DirectedGraph, validate_graph
from .hyperspace import Family, PointSet, validate_family
from .space import SemiMetricSpace, validate_space
from .values import INF, Number, div


def brute_hausdorff(space: SemiMetricSpace, A: PointSet, B: PointSet) -> Number:
    """Triple loop straight from the definition."""
    if not A or not B:
        raise ValueError("empty set")
    best = None
    for a in A:
        closest = None
        for b in B:
            d = space.dist[a][b]
            if closest is None or d < closest:
                closest = d
        if best is None or closest > best:
            best = closest
    other = None
    for b in B:
        closest = None
        for a in A:
            d = space.dist[b][a]
            if closest is None or d < closest:
                closest = d
        if other is None or closest > other:
            other = closest
    return best if best > other else other


def _brute_m_t(space: SemiMetricSpace, family: Family, table, i: int, j: int) -> Number:
    """Recompute the five-term bound from scratch, one distance at a time."""
    U, V = family.members[i], family.members[j]
    TU, TV = family.members[table[i]], family.members[table[j]]
    h_uv = brute_hausdorff(space, U, V)
    h_u_tu = brute_hausdorff(space, U, TU)
    h_v_tv = brute_hausdorff(space, V, TV)
    h_v_tu = brute_hausdorff(space, V, TU)
    best = h_uv
    for term in (h_u_tu, h_v_tv,
                 div(h_v_tv * (1 + h_u_tu), 1 + h_uv),
                 div(h_v_tu * (1 + h_u_tu), 1 + h_uv)):
        if term > best:
            best = term
    return best


def brute_lambda_star(space: SemiMetricSpace, family: Family, tmap: SetMap) -> Number:
    """Enumerate every ordered pair; no caching anywhere."""
    table = tmap.table
    k = len(family)
    best: Number = 0
    for i in range(k):
        for j in range(k):
            num = brute_hausdorff(space, family.members[table[i]],
                                  family.members[table[j]])
            bound = _brute_m_t(space, family, table, i, j)
            if bound == 0:
                if num == 0:
                    continue
                return INF
            ratio = div(num, bound)
            if ratio > best:
                best = ratio
    return best


def brute_fixed_points(family: Family, tmap: SetMap) -> tuple[int, ...]:
    """Linear scan for self-mapped members."""
    out = []
    for i in range(len(family)):
        if tmap.table[i] == i:
            out.append(i)
    return tuple(out)


@dataclass(frozen=True)
class RandomInstance:
    """One generated problem: space, graph, family and a total self-map."""

    seed: int
    space: SemiMetricSpace
    graph: DirectedGraph
    family: Family
    tmap: SetMap

    def as_problem(self) -> dict:
        """The instance as a problem-file document (exact integers)."""
        named = {name: [self.space.points[i] for i in member]
                 for name, member in zip(self.family.names, self.family.members)}
        return {
            "space": {"points": list(self.space.points),
                      "matrix": [list(row) for row in self.space.dist]},
            "graph": {"edges": [[u, v] for u, v in sorted(self.graph.edges) if u != v],
                      "implicit_loops": True},
            "family": named,
            "map": {name: self.family.names[self.tmap.table[i]]
                    for i, name in enumerate(self.family.names)},
            "config": {"mode": "exact", "semantics": "existential"},
        }


def random_instance(seed: int, n_points: int, family_mode: str = "powerset",
                    edge_density: float = 0.5) -> RandomInstance:
    """Deterministic random instance; same seed, same instance, bit for bit.

    Distances are distinct integers from [1, 100] per unordered pair, so the
    instance is exact and all derived comparisons are literal.  The graph
    always carries every loop; each ordered non-loop pair appears with the
    given density.  ``family_mode`` is "powerset" (n capped at 8 here) or
    "singletons".
    """
    if family_mode == "powerset" and not 2 <= n_points <= 8:
        raise ValueError("powerset generation supports 2..8 points")
    if not 1 <= n_points <= 100:
        raise ValueError("point count out of range")
    if not 0.0 <= edge_density <= 1.0:
        raise ValueError("edge density must lie in [0, 1]")
    rng = random.Random(seed)

    n_pairs = n_points * (n_points - 1) // 2
    pool = list(range(1, 101))
    values = []
    for _ in range(n_pairs):
        values.append(pool.pop(rng.randrange(len(pool))))
    matrix = [[0] * n_points for _ in range(n_points)]
    k = 0
    for i in range(n_points):
        for j in range(i + 1, n_points):
            matrix[i][j] = matrix[j][i] = values[k]
            k += 1
    space = validate_space(list(range(n_points)), matrix)

    edges = [(i, i) for i in range(n_points)]
    for u in range(n_points):
        for v in range(n_points):
            if u != v and rng.random() < edge_density:
                edges.append((u, v))
    graph = validate_graph(n_points, edges)

    if family_mode == "powerset":
        family = validate_family(space, powerset=True)
    elif family_mode == "singletons":
        family = validate_family(space, {f"s{p}": [p] for p in space.points})
    else:
        raise ValueError(f"unknown family mode: {family_mode!r}")

    table = tuple(rng.randrange(len(family)) for _ in range(len(family)))
    return RandomInstance(seed, space, graph, family, SetMap(table))
