"""Directed graph structure on a space and its lift to set families.

Vertices are point indices and every vertex carries a loop; parallel
(duplicate ordered) edges are rejected.  Edges and paths between *sets* come
in two flavours: existential (some cross pair is an edge) and universal
(every cross pair is).  Existential is the default; a shared vertex counts,
since its loop is a genuine edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ValidationError, Violation
from .hyperspace import Family, PointSet
from .space import SemiMetricSpace
from .values import Number

EXISTENTIAL = "existential"
UNIVERSAL = "universal"


@dataclass(frozen=True)
class DirectedGraph:
    """Edge set over vertex indices 0..n-1, loops included at every vertex."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def non_loop_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.edges if u != v)

    def undirected_adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n_vertices)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj


def validate_graph(n_vertices: int, edge_list: Sequence[tuple[int, int]],
                   implicit_loops: bool = False) -> DirectedGraph:
    """Check endpoints, duplicates and loop coverage; build the graph.

    With ``implicit_loops`` the loop at every vertex is added for free;
    otherwise a missing loop is an error.  Duplicate ordered pairs in the
    input are parallel edges and always an error.
    """
    violations: list[Violation] = []
    seen: set[tuple[int, int]] = set()
    for e in edge_list:
        u, v = e
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            violations.append(Violation("endpoint_range", (u, v),
                                         f"vertex out of range 0..{n_vertices - 1}"))
            continue
        if (u, v) in seen:
            violations.append(Violation("parallel_edge", (u, v),
                                         "ordered pair listed twice"))
            continue
        seen.add((u, v))
    if implicit_loops:
        seen.update((i, i) for i in range(n_vertices))
    else:
        for i in range(n_vertices):
            if (i, i) not in seen:
                violations.append(Violation("missing_loop", (i, i),
                                             "every vertex must carry a loop"))
    if violations:
        raise ValidationError(violations)
    return DirectedGraph(n_vertices, frozenset(seen))


def edge_weights(graph: DirectedGraph, space: SemiMetricSpace) -> dict[tuple[int, int], Number]:
    """Weight of each edge is the distance of its endpoints; loops weigh 0."""
    return {(u, v): space.d(u, v) for u, v in sorted(graph.edges)}


def undirected(graph: DirectedGraph) -> DirectedGraph:
    """Symmetric closure: direction forgotten, loops kept."""
    sym = set()
    for u, v in graph.edges:
        sym.add((u, v))
        sym.add((v, u))
    return DirectedGraph(graph.n_vertices, frozenset(sym))


def reverse(graph: DirectedGraph) -> DirectedGraph:
    """Every edge flipped."""
    return DirectedGraph(graph.n_vertices,
                         frozenset((v, u) for u, v in graph.edges))


def is_weakly_connected(graph: DirectedGraph) -> bool:
    """True when the undirected version is connected."""
    if graph.n_vertices <= 1:
        return True
    return len(set(component_labels(graph))) == 1


def component_labels(graph: DirectedGraph) -> list[int]:
    """Component id per vertex in the undirected version of the graph."""
    n = graph.n_vertices
    adj = graph.undirected_adjacency()
    labels = [-1] * n
    comp = 0
    for s in range(n):
        if labels[s] != -1:
            continue
        labels[s] = comp
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if labels[y] == -1:
                    labels[y] = comp
                    queue.append(y)
        comp += 1
    return labels


def set_edge(graph: DirectedGraph, U: PointSet, V: PointSet,
             semantics: str = EXISTENTIAL) -> bool:
    """Edge between sets: some cross pair (existential) or all (universal)."""
    if not U or not V:
        raise ValueError("set edge needs nonempty sets")
    edges = graph.edges
    pairs = ((u, v) for u in U for v in V)
    if semantics == UNIVERSAL:
        return all(p in edges for p in pairs)
    return any(p in edges for p in pairs)


def _bfs_path(adj: list[Iterable[int]], sources: PointSet,
              targets: PointSet) -> Optional[list[int]]:
    """Shortest path from any source to any target; deterministic order."""
    target_set = set(targets)
    for s in sources:
        if s in target_set:
            return [s]
    prev: dict[int, int] = {s: -1 for s in sources}
    queue = deque(sources)
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in prev:
                continue
            prev[y] = x
            if y in target_set:
                path = [y]
                while prev[path[-1]] != -1:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def set_path(graph: DirectedGraph, U: PointSet, V: PointSet,
             semantics: str = EXISTENTIAL,
             directed: bool = False) -> Optional[list[int]]:
    """Path witness between sets, or None.

    Searches the undirected version by default (the reachability relation on
    families lives there); pass ``directed=True`` for directed-path queries.
    Existential: one path from some u in U to some v in V; a shared vertex
    is a length-0 path.  Universal: requires a path for *every* ordered
    cross pair and returns the witness for the first pair.
    """
    if not U or not V:
        raise ValueError("set path needs nonempty sets")
    if directed:
        adj: list[Iterable[int]] = [[] for _ in range(graph.n_vertices)]
        for a, b in graph.edges:
            if a != b:
                adj[a].append(b)
    else:
        adj = graph.undirected_adjacency()

    if semantics == UNIVERSAL:
        witness = None
        for u in U:
            for v in V:
                p = _bfs_path(adj, (u,), (v,))
                if p is None:
                    return None
                if witness is None:
                    witness = p
        return witness
    return _bfs_path(adj, U, V)


def related(graph: DirectedGraph, U: PointSet, V: PointSet,
            semantics: str = EXISTENTIAL) -> bool:
    """The path relation between family members (undirected reachability)."""
    return set_path(graph, U, V, semantics) is not None


def equivalence_class(graph: DirectedGraph, family: Family, member: int,
                      semantics: str = EXISTENTIAL) -> tuple[int, ...]:
    """Indices of members path-related to ``member`` (always contains it)."""
    if not 0 <= member < len(family):
        raise KeyError(f"member index {member} outside family")
    U = family.members[member]
    return tuple(i for i, V in enumerate(family.members)
                 if related(graph, U, V, semantics))


def compute_y_t(graph: DirectedGraph, family: Family, table: Sequence[int],
                semantics: str = EXISTENTIAL) -> tuple[int, ...]:
    """Members U with a set-edge from U to T(U)."""
    return tuple(i for i, U in enumerate(family.members)
                 if set_edge(graph, U, family.members[table[i]], semantics))


def is_family_complete(graph: DirectedGraph, family: Family,
                       members: Sequence[int],
                       semantics: str = EXISTENTIAL) -> bool:
    """Every ordered pair of the sub-family carries a set-edge."""
    sets = [family.members[i] for i in members]
    return all(set_edge(graph, A, B, semantics) for A in sets for B in sets)


@dataclass(frozen=True)
class SubsequenceCertificate:
    """Finite-space evidence for the edge-subsequence property.

    On a finite family with strictly positive distances between distinct
    members, a convergent edge-chained sequence is eventually constant at
    its limit, and the loop at each vertex makes that constant tail the
    required edge-connected subsequence.  ``min_positive_ph`` is the gap
    that forces eventual constancy.
    """

    holds: bool
    min_positive_ph: Optional[Number]
    reason: str
    orbit_checked: bool = False
    subsequence: tuple[int, ...] = ()


def check_p_star(space: SemiMetricSpace, graph: DirectedGraph, family: Family,
                 ph: Optional[Sequence[Sequence[Number]]] = None,
                 orbit: Optional[Sequence[int]] = None,
                 semantics: str = EXISTENTIAL) -> SubsequenceCertificate:
    """Certify the subsequence property on this finite instance.

    When an orbit (sequence of member indices, eventually constant at its
    limit) is supplied, the edge-connected subsequence is also exhibited
    concretely: the positions whose member has a set-edge to the limit.
    """
    if len(family) == 1:
        gap = None
        positive = True
    else:
        if ph is None:
            from .hyperspace import ph_matrix
            ph = ph_matrix(space, family)
        k = len(family)
        gap = min(ph[i][j] for i in range(k) for j in range(k) if i != j)
        positive = not space.is_zero(gap)
    if not positive:
        return SubsequenceCertificate(
            holds=False, min_positive_ph=gap,
            reason="two distinct members are at zero distance; convergence "
                   "does not force eventual constancy")

    cert = SubsequenceCertificate(
        holds=True, min_positive_ph=gap,
        reason="distinct members are separated, so convergent edge-chained "
               "sequences are eventually constant, and loops connect the "
               "constant tail to the limit")
    if orbit is None:
        return cert

    limit = orbit[-1]
    subseq = tuple(
        n for n, i in enumerate(orbit)
        if set_edge(graph, family.members[i], family.members[limit], semantics))
    return SubsequenceCertificate(
        holds=cert.holds and bool(subseq),
        min_positive_ph=gap, reason=cert.reason,
        orbit_checked=True, subsequence=subseq)


@dataclass(frozen=True)
class Chain:
    """A point chain whose every step is shorter than the given threshold."""

    points: tuple[int, ...]
    steps: tuple[Number, ...]
    epsilon: Number

    def __post_init__(self):
        if any(not s < self.epsilon for s in self.steps):
            raise ValueError("chain step at or above threshold")


def threshold_adjacency(space: SemiMetricSpace, epsilon: Number) -> list[list[int]]:
    """Neighbours strictly closer than epsilon, per point index."""
    if epsilon <= 0:
        raise ValueError(f"threshold must be positive, got {epsilon}")
    n = space.size
    dist = space.dist
    return [[j for j in range(n) if j != i and dist[i][j] < epsilon]
            for i in range(n)]


def epsilon_chain(space: SemiMetricSpace, u, v, epsilon: Number) -> Optional[Chain]:
    """Shortest chain of sub-epsilon hops between two labels, or None."""
    adj = threshold_adjacency(space, epsilon)
    si, ti = space.index(u), space.index(v)
    path = _bfs_path(adj, (si,), (ti,))
    if path is None:
        return None
    steps = tuple(space.d(a, b) for a, b in zip(path, path[1:]))
    return Chain(tuple(path), steps, epsilon)


def is_epsilon_chainable(space: SemiMetricSpace, epsilon: Number) -> bool:
    """True when the sub-epsilon threshold graph is connected."""
    adj = threshold_adjacency(space, epsilon)
    n = space.size
    if n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == n
