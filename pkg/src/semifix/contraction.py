"""Contraction quantities and certificates for maps on a family of sets.

The central object is the five-term comparison bound m_t(U, V): the largest
of the set distance H(U, V), the two displacement distances H(U, TU) and
H(V, TV), and two rational terms that divide by 1 + H(U, V) (denominators
are therefore at least 1 and never vanish).  The expression is *ordered* in
(U, V) and is evaluated exactly as written, with no symmetrization.

lambda_star is the smallest factor making H(TU, TV) <= lambda * m_t(U, V)
hold over all ordered pairs; a verified factor below 1 together with
edge/path preservation is what the solver module's theorem machinery
consumes.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .graph import EXISTENTIAL, UNIVERSAL, DirectedGraph, component_labels, set_edge
from .hyperspace import Family, PointSet, hausdorff, ph_matrix
from .space import SemiMetricSpace
from .values import INF, Number, div, normalize

PHRow = Sequence[Sequence[Number]]


@dataclass(frozen=True)
class SetMap:
    """A total self-map of a family, as a member-index table."""

    table: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.table[i]

    @classmethod
    def from_names(cls, family: Family, mapping: dict[str, str]) -> "SetMap":
        """Build from a name-to-name table; must cover every member."""
        missing = [n for n in family.names if n not in mapping]
        if missing:
            raise KeyError(f"map not total, missing: {missing}")
        return cls(tuple(family.index(mapping[n]) for n in family.names))

    def check_total(self, family: Family) -> None:
        if len(self.table) != len(family):
            raise ValueError(
                f"map table covers {len(self.table)} members, family has {len(family)}")
        for i, j in enumerate(self.table):
            if not 0 <= j < len(family):
                raise ValueError(f"image of member {i} is out of range: {j}")


def m_t(space: SemiMetricSpace, family: Family, tmap: SetMap, i: int, j: int,
        ph: Optional[PHRow] = None) -> Number:
    """The five-term comparison bound for the ordered pair (member i, member j)."""
    k = len(family)
    if not (0 <= i < k and 0 <= j < k):
        raise KeyError(f"member pair ({i}, {j}) outside family of size {k}")
    ti, tj = tmap.table[i], tmap.table[j]
    if ph is not None:
        h_uv = ph[i][j]
        h_u_tu = ph[i][ti]
        h_v_tv = ph[j][tj]
        h_v_tu = ph[j][ti]
    else:
        mem = family.members
        h_uv = hausdorff(space, mem[i], mem[j])
        h_u_tu = hausdorff(space, mem[i], mem[ti])
        h_v_tv = hausdorff(space, mem[j], mem[tj])
        h_v_tu = hausdorff(space, mem[j], mem[ti])
    den = 1 + h_uv
    t4 = div(h_v_tv * (1 + h_u_tu), den)
    t5 = div(h_v_tu * (1 + h_u_tu), den)
    return max(h_uv, h_u_tu, h_v_tv, t4, t5)


def contraction_ratio(numerator: Number, bound: Number) -> Number:
    """H(TU, TV) / m_t with the conventions 0/0 = 0 and positive/0 = INF."""
    if bound == 0:
        return 0 if numerator == 0 else INF
    return div(numerator, bound)


def lambda_star(space: SemiMetricSpace, family: Family, tmap: SetMap,
                ph: Optional[PHRow] = None) -> tuple[Number, Optional[tuple[int, int]]]:
    """Largest ratio H(TU, TV) / m_t(U, V) over all ordered pairs.

    Returns the ratio (INF when some pair has zero bound but positive
    numerator) and the first pair attaining it in row-major order.
    """
    tmap.check_total(family)
    if ph is None:
        ph = ph_matrix(space, family)
    k = len(family)
    best: Number = 0
    witness: Optional[tuple[int, int]] = None
    table = tmap.table
    for i in range(k):
        for j in range(k):
            num = ph[table[i]][table[j]]
            ratio = contraction_ratio(num, m_t(space, family, tmap, i, j, ph))
            if witness is None or ratio > best:
                best = ratio
                witness = (i, j)
    return best, witness


def _path_related(labels: Sequence[int], U: PointSet, V: PointSet,
                  semantics: str) -> bool:
    """Undirected path between sets, via precomputed component labels."""
    comps_u = {labels[u] for u in U}
    comps_v = {labels[v] for v in V}
    if semantics == UNIVERSAL:
        return len(comps_u | comps_v) == 1
    return bool(comps_u & comps_v)


@dataclass(frozen=True)
class ContractionCertificate:
    """Outcome of the full generalized rational graph contraction check."""

    lambda_star: Number
    witness_pair: Optional[tuple[str, str]]
    edge_implication: bool
    edge_counterexample: Optional[tuple[str, str]]
    path_implication: bool
    path_counterexample: Optional[tuple[str, str]]
    semantics: str

    @property
    def edge_preserving(self) -> bool:
        return self.edge_implication and self.path_implication

    @property
    def is_contraction(self) -> bool:
        return self.edge_preserving and self.lambda_star < 1

    @property
    def verdict(self) -> str:
        if self.is_contraction:
            return "generalized-rational-graph-contraction"
        return "not-a-contraction"

    @property
    def reason(self) -> str:
        if self.is_contraction:
            return f"factor {self.lambda_star} below 1 and edges/paths preserved"
        parts = []
        if not (self.lambda_star < 1):
            parts.append(f"no factor below 1 exists (best is {self.lambda_star})")
        if not self.edge_implication:
            parts.append(f"edge implication fails at {self.edge_counterexample}")
        if not self.path_implication:
            parts.append(f"path implication fails at {self.path_counterexample}")
        return "; ".join(parts)


def verify_generalized_rational_contraction(
        space: SemiMetricSpace, graph: DirectedGraph, family: Family,
        tmap: SetMap, semantics: str = EXISTENTIAL,
        ph: Optional[PHRow] = None) -> ContractionCertificate:
    """Check both contraction conditions over every ordered family pair.

    Condition one: a set-edge (set-path) between U and V implies one between
    the images.  Condition two: the ratio bound from lambda_star.  The
    ratio condition is quantified over *all* ordered pairs, not only
    edge-related ones.
    """
    tmap.check_total(family)
    if ph is None:
        ph = ph_matrix(space, family)
    mem = family.members
    table = tmap.table
    k = len(family)

    edge_ok, edge_cex = True, None
    path_ok, path_cex = True, None
    labels = component_labels(graph)
    for i in range(k):
        for j in range(k):
            if edge_ok and set_edge(graph, mem[i], mem[j], semantics) \
                    and not set_edge(graph, mem[table[i]], mem[table[j]], semantics):
                edge_ok = False
                edge_cex = (family.names[i], family.names[j])
            if path_ok and _path_related(labels, mem[i], mem[j], semantics) \
                    and not _path_related(labels, mem[table[i]], mem[table[j]], semantics):
                path_ok = False
                path_cex = (family.names[i], family.names[j])
        if not edge_ok and not path_ok:
            break

    lam, wit = lambda_star(space, family, tmap, ph)
    wit_names = (family.names[wit[0]], family.names[wit[1]]) if wit else None
    return ContractionCertificate(
        lambda_star=lam, witness_pair=wit_names,
        edge_implication=edge_ok, edge_counterexample=edge_cex,
        path_implication=path_ok, path_counterexample=path_cex,
        semantics=semantics)


def single_lipschitz(space: SemiMetricSpace, f: Sequence[int]) -> Number:
    """Smallest c with d(fx, fy) <= c d(x, y): the largest pairwise ratio."""
    n = space.size
    dist = space.dist
    best: Number = 0
    for x in range(n):
        for y in range(x + 1, n):
            r = div(dist[f[x]][f[y]], dist[x][y])
            if r > best:
                best = r
    return best


@dataclass(frozen=True)
class BanachCertificate:
    """Edge conservation plus edge-wise shrinking for a point self-map."""

    conserves_edges: bool
    counterexample: Optional[tuple[tuple, tuple]]
    k: Number
    k_witness: Optional[tuple]

    @property
    def shrinks(self) -> bool:
        return self.k < 1

    @property
    def is_contraction(self) -> bool:
        return self.conserves_edges and self.shrinks


def verify_banach_g_contraction(space: SemiMetricSpace, graph: DirectedGraph,
                                f: Sequence[int]) -> BanachCertificate:
    """Check the two graph-contraction conditions for a point self-map.

    Edge conservation: (u, v) an edge implies (fu, fv) an edge.  Shrinking:
    the largest ratio d(fu, fv) / d(u, v) over non-loop edges (reported as
    k) is below 1.  Loops map to loops distance-free, so they are skipped
    in the ratio scan.
    """
    conserves, cex = True, None
    best: Number = 0
    best_edge = None
    for u, v in sorted(graph.edges):
        fu, fv = f[u], f[v]
        if not graph.has_edge(fu, fv):
            if conserves:
                conserves = False
                cex = ((space.points[u], space.points[v]),
                       (space.points[fu], space.points[fv]))
            continue
        if u == v:
            continue
        r = div(space.d(fu, fv), space.d(u, v))
        if r > best:
            best = r
            best_edge = (space.points[u], space.points[v])
    return BanachCertificate(conserves_edges=conserves, counterexample=cex,
                             k=best, k_witness=best_edge)


def point_to_set_lipschitz(space_x: SemiMetricSpace, space_y: SemiMetricSpace,
                           images: Sequence[PointSet]) -> tuple[Number, Optional[tuple[int, int]]]:
    """Smallest factor bounding H(image(x), image(z)) by d(x, z).

    ``images`` maps each point index of the first space to a nonempty set
    of indices in the second.  Returns the factor with a witness pair;
    below 1 means the set-valued map is a contraction.
    """
    for x, img in enumerate(images):
        if not img:
            raise ValueError(f"empty image at point index {x}")
    n = space_x.size
    best: Number = 0
    witness = None
    for x in range(n):
        for z in range(x + 1, n):
            r = div(hausdorff(space_y, images[x], images[z]), space_x.d(x, z))
            if r > best:
                best = r
                witness = (x, z)
    return best, witness


# ---------------------------------------------------------------------------
# Integral-type condition


class GammaFunction:
    """A nonnegative weight function with an evaluable antiderivative.

    Three representations: a constant, a polynomial with nonnegative
    coefficients (exact antiderivative), or a sampled table (composite
    trapezoid rule on linear interpolation).  Construction enforces the
    admissibility rules: nonnegative everywhere and not identically zero
    near 0, so the integral over [0, e] is positive for every e > 0.
    """

    def __init__(self, kind: str, coeffs: tuple = (), ts: tuple = (),
                 ys: tuple = (), step: float = 1e-4):
        self.kind = kind
        self.coeffs = coeffs
        self.ts = ts
        self.ys = ys
        self.step = step
        self._check()

    def _check(self) -> None:
        if self.kind == "poly":
            if not self.coeffs:
                raise ValueError("polynomial weight needs coefficients")
            if any(c < 0 for c in self.coeffs):
                raise ValueError("polynomial coefficients must be nonnegative "
                                 "(this is what guarantees nonnegativity on the half-line)")
            if all(c == 0 for c in self.coeffs):
                raise ValueError("weight function is identically zero")
        elif self.kind == "table":
            if len(self.ts) < 2:
                raise ValueError("table needs at least two samples")
            if self.ts[0] != 0:
                raise ValueError("table must start at t = 0")
            if any(b <= a for a, b in zip(self.ts, self.ts[1:])):
                raise ValueError("table abscissae must be strictly increasing")
            if any(y < 0 for y in self.ys):
                raise ValueError("table values must be nonnegative")
            if len(self.ys) != len(self.ts):
                raise ValueError("table columns differ in length")
            if self.ys[0] == 0 and self.ys[1] == 0:
                raise ValueError("weight is identically zero on the first segment, "
                                 "so small initial integrals vanish")
            if self.step <= 0:
                raise ValueError("trapezoid step must be positive")
        else:
            raise ValueError(f"unknown weight representation: {self.kind}")

    @classmethod
    def constant(cls, c: Number) -> "GammaFunction":
        return cls("poly", coeffs=(c,))

    @classmethod
    def polynomial(cls, coeffs: Sequence[Number]) -> "GammaFunction":
        return cls("poly", coeffs=tuple(coeffs))

    @classmethod
    def table(cls, ts: Sequence[float], ys: Sequence[float],
              step: float = 1e-4) -> "GammaFunction":
        return cls("table", ts=tuple(ts), ys=tuple(ys), step=step)

    @classmethod
    def from_text(cls, text: str) -> "GammaFunction":
        """Parse "const:c", "poly:a0,a1,...", or "table:path"."""
        kind, _, rest = text.partition(":")
        if kind == "const" and rest:
            return cls.constant(normalize(Fraction(rest)))
        if kind == "poly" and rest:
            return cls.polynomial([normalize(Fraction(c)) for c in rest.split(",")])
        if kind == "table" and rest:
            ts, ys = [], []
            with open(rest, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    t, y = line.split()
                    ts.append(float(t))
                    ys.append(float(y))
            return cls.table(ts, ys)
        raise ValueError(f"cannot parse weight function spec: {text!r}")

    def _interp(self, t: float) -> float:
        ts, ys = self.ts, self.ys
        if t >= ts[-1]:
            return float(ys[-1])
        k = bisect_right(ts, t) - 1
        t0, t1 = ts[k], ts[k + 1]
        y0, y1 = ys[k], ys[k + 1]
        return y0 + (y1 - y0) * (t - t0) / (t1 - t0)

    def antiderivative(self, x: Number, step: Optional[float] = None) -> Number:
        """Integral of the weight from 0 to x.

        Polynomials integrate in closed form and stay exact for exact
        inputs; tables use the composite trapezoid rule with the given
        step on the linear interpolant.
        """
        if x < 0:
            raise ValueError("antiderivative argument must be nonnegative")
        if self.kind == "poly":
            total: Number = 0
            for p, c in enumerate(self.coeffs):
                total += div(c * x ** (p + 1), p + 1)
            return normalize(total) if not isinstance(total, float) else total
        if x > self.ts[-1]:
            raise ValueError(
                f"table covers [0, {self.ts[-1]}] but the integrand is needed at {x}")
        xf = float(x)
        if xf == 0.0:
            return 0.0
        h = step if step is not None else self.step
        n = max(1, math.ceil(xf / h))
        w = xf / n
        total = 0.5 * (self._interp(0.0) + self._interp(xf))
        for k in range(1, n):
            total += self._interp(k * w)
        return total * w


@dataclass(frozen=True)
class IntegralCertificate:
    """Per-pair verdict of the integral-type contraction condition."""

    holds: bool
    alpha: Number
    worst_pair: Optional[tuple[str, str]]
    worst_lhs: Optional[Number]
    worst_rhs: Optional[Number]
    violations: tuple[tuple[str, str], ...]
    refinements: int = 0


def _integral_scan(space, family, tmap, alpha, gamma, ph, step):
    k = len(family)
    table = tmap.table
    worst_ratio: Number = -1
    worst = (None, None, None)
    violations = []
    for i in range(k):
        for j in range(k):
            lhs = ph[table[i]][table[j]]
            bound = m_t(space, family, tmap, i, j, ph)
            rhs = gamma.antiderivative(alpha * bound, step=step)
            ratio = contraction_ratio(lhs, rhs)
            if ratio > worst_ratio:
                worst_ratio = ratio
                worst = ((family.names[i], family.names[j]), lhs, rhs)
            if lhs > rhs:
                violations.append((family.names[i], family.names[j]))
    return worst, tuple(violations)


def verify_integral_contraction(space: SemiMetricSpace, family: Family,
                                tmap: SetMap, alpha: Number,
                                gamma: GammaFunction,
                                ph: Optional[PHRow] = None) -> IntegralCertificate:
    """Check H(TU, TV) <= integral of gamma over [0, alpha * m_t(U, V)].

    Every ordered pair is tested.  For tabulated weights the trapezoid step
    is halved until the verdict (violating set and worst pair) stops
    changing, so the answer cannot be an artefact of the step size.  The
    worst pair maximizes the ratio of the two sides (0/0 counts as 0).
    """
    if not 0 <= alpha < 1:
        raise ValueError(f"scale factor must lie in [0, 1), got {alpha}")
    tmap.check_total(family)
    if ph is None:
        ph = ph_matrix(space, family)

    step = gamma.step if gamma.kind == "table" else None
    worst, violations = _integral_scan(space, family, tmap, alpha, gamma, ph, step)
    refinements = 0
    if gamma.kind == "table":
        while refinements < 6:
            finer = step / 2
            worst2, violations2 = _integral_scan(space, family, tmap, alpha,
                                                 gamma, ph, finer)
            refinements += 1
            stable = (violations2 == violations and worst2[0] == worst[0])
            worst, violations, step = worst2, violations2, finer
            if stable:
                break

    pair, lhs, rhs = worst
    return IntegralCertificate(holds=not violations, alpha=alpha,
                               worst_pair=pair, worst_lhs=lhs, worst_rhs=rhs,
                               violations=violations, refinements=refinements)
