"""Picard iteration and the fixed-point conclusions it supports.

Orbits of a family self-map on a finite family always terminate: either the
sequence stabilizes (a fixed point) or revisits an earlier member (a cycle).
Detection is by exact identity of visited members, so no tolerance is
involved.  On top of orbits sit the convergence certificate (the geometric
decay bound) and the four-part theorem report that ties together the
contraction certificate, graph connectivity, the subsequence property and
the structure of the fixed-point set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .contraction import (ContractionCertificate, SetMap, single_lipschitz,
                          verify_generalized_rational_contraction)
from .graph import (EXISTENTIAL, DirectedGraph, SubsequenceCertificate,
                    check_p_star, compute_y_t, is_family_complete,
                    is_weakly_connected)
from .hyperspace import Family, ph_matrix
from .space import SemiMetricSpace
from .values import Number

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
HYPOTHESES_UNMET = "hypotheses-unmet"


@dataclass(frozen=True)
class Orbit:
    """A Picard iterate sequence of family member indices.

    ``members[n+1]`` is always the image of ``members[n]``; the sequence
    includes the first repeated element, so a fixed run ends [..., u, u].
    """

    members: tuple[int, ...]
    status: str  # "fixed" | "cycle" | "max-steps"
    fixed_index: Optional[int] = None
    cycle_entry: Optional[int] = None
    cycle_period: Optional[int] = None

    @property
    def terminal(self) -> Optional[int]:
        return self.members[-1] if self.status == "fixed" else None


def picard_orbit(family: Family, tmap: SetMap, start: int,
                 max_steps: Optional[int] = None) -> Orbit:
    """Iterate the map from ``start`` until exact repetition.

    A finite family forces a repeat within len(family) + 1 applications,
    which is the default step budget.
    """
    if not 0 <= start < len(family):
        raise KeyError(f"start member {start} outside family")
    if max_steps is None:
        max_steps = len(family) + 1
    if max_steps < 1:
        raise ValueError("need at least one application")
    table = tmap.table
    seq = [start]
    first_seen = {start: 0}
    for _ in range(max_steps):
        nxt = table[seq[-1]]
        seq.append(nxt)
        if nxt == seq[-2]:
            return Orbit(tuple(seq), "fixed", fixed_index=len(seq) - 2)
        if nxt in first_seen:
            entry = first_seen[nxt]
            return Orbit(tuple(seq), "cycle", cycle_entry=entry,
                         cycle_period=len(seq) - 1 - entry)
        first_seen[nxt] = len(seq) - 1
    return Orbit(tuple(seq), "max-steps")


def fixed_points(family: Family, tmap: SetMap) -> tuple[int, ...]:
    """Exhaustive scan for members mapped to themselves."""
    tmap.check_total(family)
    return tuple(i for i, j in enumerate(tmap.table) if i == j)


@dataclass(frozen=True)
class ConvergenceCertificate:
    """Geometric decay check along an orbit.

    Verifies H(U_n, U_{n+1}) <= lambda^n * H(U_0, U_1) at every step;
    ``steps`` records (measured, allowed) pairs in order.
    """

    holds: bool
    lam: Number
    steps: tuple[tuple[Number, Number], ...]
    first_violation: Optional[int] = None


def convergence_certificate(space: SemiMetricSpace, family: Family,
                            orbit: Orbit, lam: Number,
                            ph: Optional[Sequence[Sequence[Number]]] = None
                            ) -> ConvergenceCertificate:
    """Check the decay bound for a given factor in [0, 1)."""
    if not 0 <= lam < 1:
        raise ValueError(f"decay factor must lie in [0, 1), got {lam}")
    if ph is None:
        ph = ph_matrix(space, family)
    seq = orbit.members
    if len(seq) < 2:
        return ConvergenceCertificate(True, lam, ())
    h01 = ph[seq[0]][seq[1]]
    steps = []
    first_violation = None
    scale: Number = 1
    for n in range(len(seq) - 1):
        measured = ph[seq[n]][seq[n + 1]]
        allowed = scale * h01
        steps.append((measured, allowed))
        if measured > allowed and first_violation is None:
            first_violation = n
        scale = scale * lam
    return ConvergenceCertificate(first_violation is None, lam, tuple(steps),
                                  first_violation)


@dataclass(frozen=True)
class Verdict:
    """One theorem conclusion with its evidence, never a bare boolean."""

    status: str
    detail: str
    witness: tuple = ()

    @property
    def asserted_and_true(self) -> bool:
        return self.status == PASS

    @property
    def ok(self) -> bool:
        return self.status in (PASS, VACUOUS)


@dataclass(frozen=True)
class HypothesisReport:
    """The premises the main theorem needs, each checked on the instance."""

    certificate: ContractionCertificate
    weakly_connected: bool
    p_star: SubsequenceCertificate
    y_t: tuple[str, ...]

    @property
    def contraction_holds(self) -> bool:
        return self.certificate.is_contraction

    @property
    def all_hold(self) -> bool:
        return (self.contraction_holds and self.weakly_connected
                and self.p_star.holds and bool(self.y_t))

    def missing(self) -> list[str]:
        out = []
        if not self.contraction_holds:
            out.append(f"not a contraction ({self.certificate.reason})")
        if not self.weakly_connected:
            out.append("graph is not weakly connected")
        if not self.p_star.holds:
            out.append("subsequence property fails")
        if not self.y_t:
            out.append("no member has an edge to its image")
        return out


@dataclass(frozen=True)
class TheoremReport:
    """The four conclusions, their shared hypotheses, and the fixed set."""

    fixed_points: tuple[str, ...]
    hypotheses: HypothesisReport
    weight_zero_on_fixed: Verdict
    fixed_implies_y_t: Verdict
    existence_uniqueness: Verdict
    complete_iff_singleton: Verdict

    @property
    def verdicts(self) -> dict[str, Verdict]:
        return {
            "weight-zero-on-fixed": self.weight_zero_on_fixed,
            "fixed-implies-y-t": self.fixed_implies_y_t,
            "existence-uniqueness": self.existence_uniqueness,
            "complete-iff-singleton": self.complete_iff_singleton,
        }

    @property
    def all_ok(self) -> bool:
        return all(v.ok for v in self.verdicts.values())

    @property
    def all_asserted_pass(self) -> bool:
        return (self.hypotheses.all_hold
                and all(v.status == PASS for v in self.verdicts.values()))


def theorem3_verdicts(space: SemiMetricSpace, graph: DirectedGraph,
                      family: Family, tmap: SetMap,
                      semantics: str = EXISTENTIAL) -> TheoremReport:
    """Evaluate the four fixed-point conclusions on this instance.

    The contraction certificate gates everything: when it fails, the
    conclusions are reported as hypotheses-unmet rather than pass/fail,
    because nothing is asserted about non-contractions.  The existence
    conclusion additionally needs weak connectivity, the subsequence
    property and a nonempty edge-to-image set; it reports both existence
    and uniqueness, and cross-checks by driving orbits from every
    edge-to-image member.
    """
    tmap.check_total(family)
    ph = ph_matrix(space, family)
    cert = verify_generalized_rational_contraction(space, graph, family, tmap,
                                                   semantics, ph)
    y_t_idx = compute_y_t(graph, family, tmap.table, semantics)
    p_star = check_p_star(space, graph, family, ph=ph, semantics=semantics)
    hyp = HypothesisReport(
        certificate=cert,
        weakly_connected=is_weakly_connected(graph),
        p_star=p_star,
        y_t=tuple(family.names[i] for i in y_t_idx))

    fixed_idx = fixed_points(family, tmap)
    fixed_names = tuple(family.names[i] for i in fixed_idx)

    if not cert.is_contraction:
        unmet = Verdict(HYPOTHESES_UNMET,
                        f"map is not a contraction: {cert.reason}")
        return TheoremReport(fixed_names, hyp, unmet, unmet, unmet, unmet)

    # Conclusion: distances inside a complete fixed set vanish.
    if not fixed_idx:
        v1 = Verdict(VACUOUS, "no fixed points, nothing to weigh")
    elif not is_family_complete(graph, family, fixed_idx, semantics):
        v1 = Verdict(VACUOUS, "fixed set is not complete, antecedent fails")
    else:
        bad = [(family.names[i], family.names[j])
               for i in fixed_idx for j in fixed_idx
               if not space.is_zero(ph[i][j])]
        if bad:
            v1 = Verdict(FAIL, "positive distance inside complete fixed set",
                         witness=tuple(bad[:3]))
        else:
            v1 = Verdict(PASS, "all pairwise distances on the fixed set are zero",
                         witness=fixed_names)

    # Conclusion: a fixed point forces the edge-to-image set to be nonempty.
    if not fixed_idx:
        v2 = Verdict(VACUOUS, "no fixed points, antecedent fails")
    else:
        subset_misses = [family.names[i] for i in fixed_idx if i not in y_t_idx]
        if not y_t_idx:
            v2 = Verdict(FAIL, "fixed points exist but no member has an edge "
                               "to its image", witness=fixed_names)
        elif subset_misses:
            v2 = Verdict(PASS, "edge-to-image set is nonempty, but under "
                               f"{semantics} semantics these fixed points fall "
                               f"outside it: {subset_misses} (loops only cover "
                               "the singleton diagonal)",
                         witness=tuple(subset_misses))
        else:
            v2 = Verdict(PASS, "every fixed point has an edge to itself via loops",
                         witness=fixed_names)

    # Conclusion: existence and uniqueness of the fixed point.
    if not hyp.all_hold:
        v3 = Verdict(HYPOTHESES_UNMET, "; ".join(hyp.missing()))
    else:
        orbit_ends = {}
        for i in y_t_idx:
            orb = picard_orbit(family, tmap, i)
            orbit_ends[family.names[i]] = (
                family.names[orb.terminal] if orb.terminal is not None else None)
        ends = set(orbit_ends.values())
        if not fixed_idx:
            v3 = Verdict(FAIL, "hypotheses hold but no fixed point exists")
        elif len(fixed_idx) > 1:
            v3 = Verdict(FAIL, "fixed point is not unique", witness=fixed_names)
        elif None in ends or ends != {fixed_names[0]}:
            stray = {k: v for k, v in orbit_ends.items() if v != fixed_names[0]}
            v3 = Verdict(FAIL, f"some orbits do not reach {fixed_names[0]}: {stray}")
        else:
            v3 = Verdict(PASS,
                         f"unique fixed point {fixed_names[0]}; every orbit "
                         "from the edge-to-image set reaches it",
                         witness=fixed_names)

    # Conclusion: the fixed set is complete exactly when it is a singleton.
    if not fixed_idx:
        v4 = Verdict(VACUOUS, "no fixed points, biconditional not asserted")
    else:
        complete = is_family_complete(graph, family, fixed_idx, semantics)
        singleton = len(fixed_idx) == 1
        if complete == singleton:
            v4 = Verdict(PASS, f"complete={complete} and singleton={singleton} agree",
                         witness=fixed_names)
        else:
            v4 = Verdict(FAIL, f"complete={complete} but singleton={singleton}",
                         witness=fixed_names)

    return TheoremReport(fixed_names, hyp, v1, v2, v3, v4)


@dataclass(frozen=True)
class SingleValuedResult:
    """Iteration outcome for a point self-map."""

    orbit: tuple
    status: str  # "fixed" | "cycle" | "max-steps"
    fixed_point: Optional[object]
    steps_to_fixed: Optional[int]
    lipschitz: Number
    all_starts_converge: Optional[bool] = None
    unique_fixed_point: Optional[object] = None
    basin: dict = field(default_factory=dict)


def _iterate_point_map(f: Sequence[int], start: int, max_steps: int):
    seq = [start]
    seen = {start: 0}
    for _ in range(max_steps):
        nxt = f[seq[-1]]
        seq.append(nxt)
        if nxt == seq[-2]:
            return seq, "fixed"
        if nxt in seen:
            return seq, "cycle"
        seen[nxt] = len(seq) - 1
    return seq, "max-steps"


def solve_single_valued(space: SemiMetricSpace, f: Sequence[int], y0,
                        max_steps: Optional[int] = None) -> SingleValuedResult:
    """Iterate a point self-map from a start label.

    When the map's Lipschitz constant is below 1, the result additionally
    sweeps every start and reports whether all of them reach one common
    fixed point (the empirical everywhere-convergent check).
    """
    start = space.index(y0)
    if max_steps is None:
        max_steps = space.size + 1
    if max_steps < 1:
        raise ValueError("need at least one application")
    seq, status = _iterate_point_map(f, start, max_steps)
    labels = tuple(space.points[i] for i in seq)
    fixed = space.points[seq[-1]] if status == "fixed" else None
    steps_to = len(seq) - 2 if status == "fixed" else None

    c = single_lipschitz(space, f)
    if not c < 1:
        return SingleValuedResult(labels, status, fixed, steps_to, c)

    basin = {}
    targets = set()
    for s in range(space.size):
        sseq, sstat = _iterate_point_map(f, s, space.size + 1)
        end = space.points[sseq[-1]] if sstat == "fixed" else None
        basin[space.points[s]] = end
        targets.add(end)
    converged = None not in targets and len(targets) == 1
    return SingleValuedResult(labels, status, fixed, steps_to, c,
                              all_starts_converge=converged,
                              unique_fixed_point=next(iter(targets)) if converged else None,
                              basin=basin)
