"""Problem files, command dispatch and report emission.

A problem instance is one JSON document with keys "space", "graph",
"family", "map" and "config".  Commands parse it, run the requested
analysis and emit either a human-readable text report or a canonical
machine report (sorted keys, exact rationals as "p/q" strings) whose bytes
depend only on the inputs and options.

Exit codes: 0 success/pass, 1 verdict failure, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .contraction import (GammaFunction, SetMap, lambda_star,
                          verify_generalized_rational_contraction,
                          verify_integral_contraction)
from .errors import ParseError, SemifixError, ValidationError
from .graph import (EXISTENTIAL, UNIVERSAL, DirectedGraph, component_labels,
                    epsilon_chain, is_epsilon_chainable, threshold_adjacency,
                    validate_graph)
from .hyperspace import Family, ph_matrix, validate_family
from .solver import convergence_certificate, fixed_points, picard_orbit, theorem3_verdicts
from .space import SemiMetricSpace, validate_space
from .values import DEFAULT_TOLERANCE, EXACT, FLOAT, Number, parse_value, render

COMMANDS = ("validate", "hausdorff", "analyze", "iterate", "fixed-points",
            "theorem", "chainable", "integral")


@dataclass(frozen=True)
class ProblemSpec:
    """A fully validated problem instance plus its normalized document."""

    space: SemiMetricSpace
    graph: DirectedGraph
    family: Family
    tmap: Optional[SetMap]
    semantics: str
    normalized: dict

    def require_map(self) -> SetMap:
        if self.tmap is None:
            raise ParseError('this command needs a "map" table in the problem file')
        return self.tmap


@dataclass(frozen=True)
class Report:
    """One command's outcome; machine form excludes timing by design."""

    command: str
    digest: str
    options: dict
    result: dict
    ok: bool
    elapsed: float


# ---------------------------------------------------------------------------
# Parsing


def load_document(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    if "space" not in doc:
        raise ParseError(f'{path}: missing required key "space"')
    known = {"space", "graph", "family", "map", "config"}
    unknown = set(doc) - known
    if unknown:
        raise ParseError(f"{path}: unknown top-level keys {sorted(unknown)}")
    return doc


def _config_of(doc: dict, semantics_override: Optional[str]) -> tuple[str, str, Optional[float]]:
    config = doc.get("config") or {}
    if not isinstance(config, dict):
        raise ParseError('"config" must be an object')
    mode = config.get("mode", EXACT)
    if mode not in (EXACT, FLOAT):
        raise ParseError(f'config.mode must be "exact" or "float", got {mode!r}')
    tolerance = config.get("tolerance")
    if mode == FLOAT:
        tolerance = float(tolerance) if tolerance is not None else DEFAULT_TOLERANCE
    elif tolerance is not None:
        raise ParseError("config.tolerance only applies to float mode")
    semantics = semantics_override or config.get("semantics", EXISTENTIAL)
    if semantics not in (EXISTENTIAL, UNIVERSAL):
        raise ParseError(f'config.semantics must be "existential" or "universal", '
                         f"got {semantics!r}")
    return mode, semantics, tolerance


def _build_space(doc: dict, mode: str, tolerance: Optional[float]) -> SemiMetricSpace:
    raw = doc["space"]
    if not isinstance(raw, dict) or "points" not in raw:
        raise ParseError('"space" must be an object with a "points" list')
    points = raw["points"]
    if not isinstance(points, list) or not points:
        raise ParseError('"space.points" must be a nonempty list')
    if "matrix" in raw and "formula" in raw:
        raise ParseError('"space" takes either "matrix" or "formula", not both')
    if "formula" in raw:
        if raw["formula"] != "squared_difference":
            raise ParseError(f'unknown space formula: {raw["formula"]!r}')
        if not all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in points):
            raise ParseError("squared_difference needs numeric point labels")
        matrix = [[parse_value((x - y) ** 2, mode) for y in points] for x in points]
    elif "matrix" in raw:
        rows = raw["matrix"]
        if not isinstance(rows, list):
            raise ParseError('"space.matrix" must be a list of rows')
        try:
            matrix = [[parse_value(v, mode) for v in row] for row in rows]
        except (ValueError, ZeroDivisionError, TypeError) as e:
            raise ParseError(f"space.matrix: {e}") from e
    else:
        raise ParseError('"space" needs a "matrix" or "formula"')
    return validate_space(points, matrix, mode, tolerance)


def _build_graph(doc: dict, space: SemiMetricSpace) -> tuple[DirectedGraph, bool]:
    raw = doc.get("graph") or {}
    if not isinstance(raw, dict):
        raise ParseError('"graph" must be an object')
    implicit = raw.get("implicit_loops", True)
    pairs = []
    for e in raw.get("edges", []):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"graph edge must be a two-element list, got {e!r}")
        try:
            pairs.append((space.index(e[0]), space.index(e[1])))
        except KeyError as err:
            raise ParseError(f"graph edge {e}: {err}") from err
    return validate_graph(space.size, pairs, implicit_loops=implicit), implicit


def _build_family(doc: dict, space: SemiMetricSpace) -> Family:
    raw = doc.get("family", "powerset")
    if raw == "powerset":
        return validate_family(space, powerset=True)
    if not isinstance(raw, dict):
        raise ParseError('"family" must be "powerset" or an object of named sets')
    for name, labels in raw.items():
        if not isinstance(labels, list):
            raise ParseError(f"family member {name!r} must be a list of points")
    try:
        return validate_family(space, raw)
    except KeyError as e:
        raise ParseError(f"family: {e}") from e


def _build_map(doc: dict, family: Family) -> Optional[SetMap]:
    raw = doc.get("map")
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise ParseError('"map" must be an object of member-name pairs')
    for src, dst in raw.items():
        if src not in family.names:
            raise ParseError(f"map source {src!r} is not a family member")
        if dst not in family.names:
            raise ParseError(f"map target {dst!r} is not a family member")
    try:
        return SetMap.from_names(family, raw)
    except KeyError as e:
        raise ParseError(f"map: {e}") from e


def _normalize(space: SemiMetricSpace, graph: DirectedGraph, family: Family,
               tmap: Optional[SetMap], semantics: str,
               powerset: bool) -> dict:
    def num(v: Number):
        if isinstance(v, (int, float)):
            return v
        return render(v)

    doc: dict = {
        "space": {"points": list(space.points),
                  "matrix": [[num(v) for v in row] for row in space.dist]},
        "graph": {"edges": [[space.points[u], space.points[v]]
                            for u, v in sorted(graph.edges)],
                  "implicit_loops": False},
        "family": "powerset" if powerset else
                  {name: [space.points[i] for i in member]
                   for name, member in zip(family.names, family.members)},
        "config": {"mode": space.mode, "semantics": semantics,
                   "tolerance": space.tolerance},
    }
    if tmap is not None:
        doc["map"] = {name: family.names[tmap.table[i]]
                      for i, name in enumerate(family.names)}
    return doc


def build_problem(doc: dict, semantics_override: Optional[str] = None) -> ProblemSpec:
    mode, semantics, tolerance = _config_of(doc, semantics_override)
    space = _build_space(doc, mode, tolerance)
    graph, _ = _build_graph(doc, space)
    family = _build_family(doc, space)
    tmap = _build_map(doc, family)
    normalized = _normalize(space, graph, family, tmap, semantics,
                            powerset=doc.get("family", "powerset") == "powerset")
    return ProblemSpec(space, graph, family, tmap, semantics, normalized)


def parse_problem(path: str, semantics_override: Optional[str] = None) -> ProblemSpec:
    """Load, validate and normalize a problem file; raises on any defect."""
    return build_problem(load_document(path), semantics_override)


def problem_digest(problem: ProblemSpec) -> str:
    blob = json.dumps(problem.normalized, sort_keys=True,
                      separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(blob.encode()).hexdigest()


# ---------------------------------------------------------------------------
# Commands


def _names(problem: ProblemSpec, idxs) -> list[str]:
    return [problem.family.names[i] for i in idxs]


def _cmd_validate(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    # Reaching this point means every validator already passed.
    return {
        "valid": True,
        "violations": [],
        "points": problem.space.size,
        "edges": len(problem.graph.edges),
        "family_members": len(problem.family),
        "map_present": problem.tmap is not None,
    }, True


def _cmd_hausdorff(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    ph = ph_matrix(problem.space, problem.family)
    return {
        "names": list(problem.family.names),
        "matrix": [[render(v) for v in row] for row in ph],
    }, True


def _certificate_payload(cert) -> dict:
    return {
        "lambda_star": render(cert.lambda_star),
        "witness_pair": list(cert.witness_pair) if cert.witness_pair else None,
        "edge_implication": cert.edge_implication,
        "edge_counterexample": list(cert.edge_counterexample) if cert.edge_counterexample else None,
        "path_implication": cert.path_implication,
        "path_counterexample": list(cert.path_counterexample) if cert.path_counterexample else None,
        "edge_preserving": cert.edge_preserving,
        "verdict": cert.verdict,
        "reason": cert.reason,
    }


def _cmd_analyze(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    tmap = problem.require_map()
    cert = verify_generalized_rational_contraction(
        problem.space, problem.graph, problem.family, tmap, problem.semantics)
    return _certificate_payload(cert), cert.is_contraction


def _cmd_iterate(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    tmap = problem.require_map()
    start = options["start"]
    try:
        start_idx = problem.family.index(start)
    except KeyError as e:
        raise ParseError(str(e)) from e
    orbit = picard_orbit(problem.family, tmap, start_idx,
                         max_steps=options.get("max_steps"))
    ph = ph_matrix(problem.space, problem.family)
    lam, _ = lambda_star(problem.space, problem.family, tmap, ph)
    payload: dict = {
        "orbit": _names(problem, orbit.members),
        "status": orbit.status,
        "fixed_index": orbit.fixed_index,
        "cycle_entry": orbit.cycle_entry,
        "cycle_period": orbit.cycle_period,
        "lambda_star": render(lam),
    }
    ok = orbit.status == "fixed"
    if lam < 1:
        cert = convergence_certificate(problem.space, problem.family, orbit, lam, ph)
        payload["certificate"] = {
            "holds": cert.holds,
            "lambda": render(cert.lam),
            "steps": [[render(a), render(b)] for a, b in cert.steps],
            "first_violation": cert.first_violation,
        }
        ok = ok and cert.holds
    else:
        payload["certificate"] = None
        payload["note"] = "no decay factor below 1 exists; bound not applicable"
    return payload, ok


def _cmd_fixed_points(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    tmap = problem.require_map()
    idxs = fixed_points(problem.family, tmap)
    return {"fixed_points": _names(problem, idxs), "count": len(idxs)}, True


def _cmd_theorem(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    tmap = problem.require_map()
    report = theorem3_verdicts(problem.space, problem.graph, problem.family,
                               tmap, problem.semantics)
    hyp = report.hypotheses
    payload = {
        "fixed_points": list(report.fixed_points),
        "hypotheses": {
            "contraction": hyp.contraction_holds,
            "certificate": _certificate_payload(hyp.certificate),
            "weakly_connected": hyp.weakly_connected,
            "subsequence_property": hyp.p_star.holds,
            "min_positive_ph": (render(hyp.p_star.min_positive_ph)
                                if hyp.p_star.min_positive_ph is not None else None),
            "y_t": list(hyp.y_t),
            "all_hold": hyp.all_hold,
        },
        "verdicts": {
            name: {"status": v.status, "detail": v.detail,
                   "witness": [list(w) if isinstance(w, tuple) else w
                               for w in v.witness]}
            for name, v in report.verdicts.items()
        },
    }
    return payload, report.all_asserted_pass


def _cmd_chainable(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    eps = options["epsilon"]
    if eps <= 0:
        raise ParseError(f"epsilon must be positive, got {render(eps)}")
    space = problem.space
    chainable = is_epsilon_chainable(space, eps)
    adj = threshold_adjacency(space, eps)
    thr = DirectedGraph(space.size, frozenset(
        (u, v) for u in range(space.size) for v in adj[u]) | frozenset(
        (i, i) for i in range(space.size)))
    labels = component_labels(thr)
    comps: dict[int, list] = {}
    for i, c in enumerate(labels):
        comps.setdefault(c, []).append(space.points[i])
    components = sorted(comps.values(), key=lambda g: str(g[0]))
    chains = []
    for i in range(space.size):
        for j in range(i + 1, space.size):
            ch = epsilon_chain(space, space.points[i], space.points[j], eps)
            chains.append({
                "from": space.points[i],
                "to": space.points[j],
                "chain": [space.points[k] for k in ch.points] if ch else None,
                "steps": [render(s) for s in ch.steps] if ch else None,
            })
    return {
        "epsilon": render(eps),
        "chainable": chainable,
        "components": components,
        "isolated": [g[0] for g in components if len(g) == 1],
        "chains": chains,
    }, chainable


def _cmd_integral(problem: ProblemSpec, options: dict) -> tuple[dict, bool]:
    tmap = problem.require_map()
    alpha = options["alpha"]
    gamma = options["gamma"]
    cert = verify_integral_contraction(problem.space, problem.family, tmap,
                                       alpha, gamma)
    return {
        "alpha": render(cert.alpha),
        "gamma": options["gamma_text"],
        "holds": cert.holds,
        "worst_pair": list(cert.worst_pair) if cert.worst_pair else None,
        "worst_lhs": render(cert.worst_lhs) if cert.worst_lhs is not None else None,
        "worst_rhs": render(cert.worst_rhs) if cert.worst_rhs is not None else None,
        "violations": [list(p) for p in cert.violations],
        "refinements": cert.refinements,
    }, cert.holds


_HANDLERS = {
    "validate": _cmd_validate,
    "hausdorff": _cmd_hausdorff,
    "analyze": _cmd_analyze,
    "iterate": _cmd_iterate,
    "fixed-points": _cmd_fixed_points,
    "theorem": _cmd_theorem,
    "chainable": _cmd_chainable,
    "integral": _cmd_integral,
}


def execute(command: str, problem: ProblemSpec, options: Optional[dict] = None) -> Report:
    """Run one command against a parsed problem and wrap the outcome."""
    if command not in _HANDLERS:
        raise ParseError(f"unknown command: {command!r}")
    options = dict(options or {})
    started = time.perf_counter()
    result, ok = _HANDLERS[command](problem, options)
    elapsed = time.perf_counter() - started
    shown = {k: v for k, v in options.items()
             if k in ("start", "max_steps", "epsilon", "alpha")}
    if "gamma_text" in options:
        shown["gamma"] = options["gamma_text"]
    shown["semantics"] = problem.semantics
    shown = {k: (render(v) if isinstance(v, Fraction) else v)
             for k, v in shown.items()}
    return Report(command=command, digest=problem_digest(problem),
                  options=shown, result=result, ok=ok, elapsed=elapsed)


# ---------------------------------------------------------------------------
# Emission


def emit_report(report: Report, fmt: str = "text") -> str:
    """Render a report; machine form is canonical and byte-stable."""
    if fmt == "machine":
        doc = {"command": report.command, "digest": report.digest,
               "options": report.options, "ok": report.ok,
               "result": report.result}
        return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                          ensure_ascii=True)
    lines = [f"{report.command}: {'pass' if report.ok else 'FAIL'} "
             f"(digest {report.digest[:12]})"]
    opts = {k: v for k, v in report.options.items() if v is not None}
    if opts:
        lines.append("  options: " + ", ".join(f"{k}={v}" for k, v in sorted(opts.items())))
    lines.extend(_text_lines(report.command, report.result))
    lines.append(f"  elapsed: {report.elapsed:.4f} s")
    return "\n".join(lines)


def _text_lines(command: str, r: dict) -> list[str]:
    out = []
    if command == "validate":
        out.append(f"  valid: {r['valid']} ({r['points']} points, "
                   f"{r['edges']} edges, {r['family_members']} family members)")
        for v in r["violations"]:
            out.append(f"  violation: {v}")
    elif command == "hausdorff":
        names = r["names"]
        width = max(len(n) for n in names) if names else 0
        for name, row in zip(names, r["matrix"]):
            cells = " ".join(str(c).rjust(6) for c in row)
            out.append(f"  {name.rjust(width)} | {cells}")
    elif command == "analyze":
        pair = r["witness_pair"]
        pair_text = f"({pair[0]}, {pair[1]})" if pair else "none"
        out.append(f"  lambda* = {r['lambda_star']}  witness pair {pair_text}")
        out.append(f"  edge implication: {r['edge_implication']}"
                   + (f"  counterexample {tuple(r['edge_counterexample'])}"
                      if r["edge_counterexample"] else ""))
        out.append(f"  path implication: {r['path_implication']}"
                   + (f"  counterexample {tuple(r['path_counterexample'])}"
                      if r["path_counterexample"] else ""))
        out.append(f"  verdict: {r['verdict']} ({r['reason']})")
    elif command == "iterate":
        out.append("  orbit: " + " -> ".join(str(m) for m in r["orbit"]))
        out.append(f"  status: {r['status']}"
                   + (f" (fixed at index {r['fixed_index']})"
                      if r["fixed_index"] is not None else "")
                   + (f" (cycle entry {r['cycle_entry']}, period {r['cycle_period']})"
                      if r["cycle_entry"] is not None else ""))
        out.append(f"  lambda* = {r['lambda_star']}")
        cert = r.get("certificate")
        if cert:
            out.append(f"  decay bound at lambda={cert['lambda']}: "
                       f"{'holds' if cert['holds'] else 'violated'}")
            for n, (lhs, rhs) in enumerate(cert["steps"]):
                out.append(f"    step {n}: {lhs} <= {rhs}")
        elif "note" in r:
            out.append(f"  note: {r['note']}")
    elif command == "fixed-points":
        out.append(f"  fixed points ({r['count']}): "
                   + (", ".join(str(n) for n in r["fixed_points"]) or "none"))
    elif command == "theorem":
        hyp = r["hypotheses"]
        out.append(f"  fixed points: {', '.join(r['fixed_points']) or 'none'}")
        out.append(f"  hypotheses: contraction={hyp['contraction']} "
                   f"(lambda*={hyp['certificate']['lambda_star']}), "
                   f"weakly_connected={hyp['weakly_connected']}, "
                   f"subsequence_property={hyp['subsequence_property']}, "
                   f"y_t={{{', '.join(hyp['y_t'])}}}")
        for name, v in r["verdicts"].items():
            out.append(f"  {name}: {v['status']} - {v['detail']}")
    elif command == "chainable":
        out.append(f"  epsilon = {r['epsilon']}: "
                   f"{'chainable' if r['chainable'] else 'NOT chainable'}")
        if r["isolated"]:
            out.append(f"  isolated: {', '.join(str(p) for p in r['isolated'])}")
        out.append(f"  components: {r['components']}")
        for ch in r["chains"]:
            if ch["chain"] is not None:
                hops = " - ".join(str(p) for p in ch["chain"])
                steps = ", ".join(ch["steps"]) if ch["steps"] else "none"
                out.append(f"  {ch['from']} to {ch['to']}: {hops} (steps {steps})")
            else:
                out.append(f"  {ch['from']} to {ch['to']}: no chain")
    elif command == "integral":
        out.append(f"  alpha = {r['alpha']}, gamma = {r['gamma']}")
        out.append(f"  holds: {r['holds']}")
        if r["worst_pair"]:
            out.append(f"  worst pair ({r['worst_pair'][0]}, {r['worst_pair'][1]}): "
                       f"{r['worst_lhs']} <= {r['worst_rhs']}")
        for p in r["violations"]:
            out.append(f"  violated at ({p[0]}, {p[1]})")
    return out


# ---------------------------------------------------------------------------
# Entry point


def _lenient_validate(path: str, semantics_override: Optional[str]) -> Report:
    """The validate command: collect violations instead of failing fast."""
    started = time.perf_counter()
    doc = load_document(path)
    mode, semantics, tolerance = _config_of(doc, semantics_override)
    violations: list[str] = []
    space = graph = family = tmap = None
    try:
        space = _build_space(doc, mode, tolerance)
    except ValidationError as e:
        violations.extend(f"space: {v}" for v in e.violations)
    if space is not None:
        try:
            graph, _ = _build_graph(doc, space)
        except ValidationError as e:
            violations.extend(f"graph: {v}" for v in e.violations)
        try:
            family = _build_family(doc, space)
        except ValidationError as e:
            violations.extend(f"family: {v}" for v in e.violations)
    if family is not None:
        try:
            tmap = _build_map(doc, family)
        except ParseError as e:
            violations.append(f"map: {e}")
    ok = not violations and space is not None and graph is not None
    digest = ""
    if ok:
        problem = build_problem(doc, semantics_override)
        digest = problem_digest(problem)
    result = {
        "valid": ok,
        "violations": violations,
        "points": space.size if space else 0,
        "edges": len(graph.edges) if graph else 0,
        "family_members": len(family) if family else 0,
        "map_present": tmap is not None,
    }
    return Report("validate", digest, {"semantics": semantics}, result, ok,
                  time.perf_counter() - started)


def _parse_rational_arg(text: str, mode: str) -> Number:
    try:
        return parse_value(text, mode)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"cannot parse number {text!r}: {e}") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semifix",
        description="Analyze set-valued maps on finite semi-metric spaces "
                    "with a directed graph.")
    parser.add_argument("--machine", action="store_true",
                        help="emit canonical machine-readable JSON")
    parser.add_argument("--semantics", choices=[EXISTENTIAL, UNIVERSAL],
                        default=None, help="override the set-edge semantics")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="problem instance JSON file")
        return p

    add("validate", "run every validator and list violations")
    add("hausdorff", "print the full set-distance matrix")
    add("analyze", "contraction certificate: factor, witness, preservation")
    p = add("iterate", "Picard orbit from a start member")
    p.add_argument("--start", required=True, metavar="SET_ID")
    p.add_argument("--max-steps", type=int, default=None)
    add("fixed-points", "members mapped to themselves")
    add("theorem", "the four fixed-point conclusions with hypotheses")
    p = add("chainable", "threshold-chain connectivity at a given epsilon")
    p.add_argument("--epsilon", required=True)
    p = add("integral", "integral-type contraction condition")
    p.add_argument("--alpha", required=True)
    p.add_argument("--gamma", required=True,
                   help='"const:c", "poly:a0,a1,...", or "table:path"')
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            report = _lenient_validate(args.file, args.semantics)
        else:
            problem = parse_problem(args.file, args.semantics)
            options: dict = {}
            if args.command == "iterate":
                options["start"] = args.start
                options["max_steps"] = args.max_steps
            elif args.command == "chainable":
                options["epsilon"] = _parse_rational_arg(args.epsilon,
                                                         problem.space.mode)
            elif args.command == "integral":
                options["alpha"] = _parse_rational_arg(args.alpha,
                                                       problem.space.mode)
                try:
                    options["gamma"] = GammaFunction.from_text(args.gamma)
                except (ValueError, OSError) as e:
                    raise ParseError(f"--gamma: {e}") from e
                options["gamma_text"] = args.gamma
            report = execute(args.command, problem, options)
    except (SemifixError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(emit_report(report, "machine" if args.machine else "text"))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
