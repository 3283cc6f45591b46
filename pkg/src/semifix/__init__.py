"""Fixed-point analysis of set-valued maps on finite semi-metric spaces.

The pieces, bottom up: finite semi-metric spaces (no triangle inequality),
set families with the Pompeiu-Hausdorff semi-metric, a directed graph lifted
to set-level edges and paths, contraction certificates built on a five-term
rational bound, and Picard iteration with four theorem-style conclusions.
Brute-force oracles cross-check every fast path, and a CLI drives it all
from JSON problem files.
"""

from .contraction import (BanachCertificate, ContractionCertificate,
                          GammaFunction, IntegralCertificate, SetMap,
                          contraction_ratio, lambda_star, m_t,
                          point_to_set_lipschitz, single_lipschitz,
                          verify_banach_g_contraction,
                          verify_generalized_rational_contraction,
                          verify_integral_contraction)
from .errors import ParseError, SemifixError, ValidationError, Violation
from .graph import (EXISTENTIAL, UNIVERSAL, Chain, DirectedGraph,
                    SubsequenceCertificate, check_p_star, component_labels,
                    compute_y_t, edge_weights, epsilon_chain,
                    equivalence_class, is_epsilon_chainable,
                    is_family_complete, is_weakly_connected, related,
                    reverse, set_edge, set_path, undirected, validate_graph)
from .hyperspace import (Family, PointSet, closure, directed_excess,
                         hausdorff, is_closed, nadler_select, ph_matrix,
                         point_set, point_to_set_distance, validate_family)
from .oracle import (RandomInstance, brute_fixed_points, brute_hausdorff,
                     brute_lambda_star, random_instance)
from .solver import (ConvergenceCertificate, Orbit, SingleValuedResult,
                     TheoremReport, Verdict, convergence_certificate,
                     fixed_points, picard_orbit, solve_single_valued,
                     theorem3_verdicts)
from .space import (OrbitDiagnostics, SemiMetricSpace, check_matrix,
                    orbit_diagnostics, space_from_squared_difference,
                    validate_space)
from .values import EXACT, FLOAT, INF, Number, div, parse_value, render

__version__ = "0.1.0"

__all__ = [
    "BanachCertificate", "Chain", "ContractionCertificate",
    "ConvergenceCertificate", "DirectedGraph", "EXACT", "EXISTENTIAL",
    "FLOAT", "Family", "GammaFunction", "INF", "IntegralCertificate",
    "Number", "Orbit", "OrbitDiagnostics", "ParseError", "PointSet",
    "RandomInstance", "SemiMetricSpace", "SemifixError", "SetMap",
    "SingleValuedResult", "SubsequenceCertificate", "TheoremReport",
    "UNIVERSAL", "ValidationError", "Verdict", "Violation",
    "brute_fixed_points", "brute_hausdorff", "brute_lambda_star",
    "check_matrix", "check_p_star", "closure", "component_labels",
    "compute_y_t", "contraction_ratio", "convergence_certificate", "div",
    "directed_excess", "edge_weights", "epsilon_chain", "equivalence_class",
    "fixed_points", "hausdorff", "is_closed", "is_epsilon_chainable",
    "is_family_complete", "is_weakly_connected", "lambda_star", "m_t",
    "nadler_select", "orbit_diagnostics", "parse_value", "ph_matrix",
    "picard_orbit", "point_set", "point_to_set_distance",
    "point_to_set_lipschitz", "random_instance", "related", "render",
    "reverse", "set_edge", "set_path", "single_lipschitz",
    "solve_single_valued", "space_from_squared_difference",
    "theorem3_verdicts", "undirected", "validate_family", "validate_graph",
    "validate_space", "verify_banach_g_contraction",
    "verify_generalized_rational_contraction", "verify_integral_contraction",
]
