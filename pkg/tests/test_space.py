"""Semi-metric space construction, validation and diagnostics.

Core claims:
    - the squares matrix validates; each broken axiom is pinned to its cell
    - distance lookups match the matrix; unknown labels raise
    - open balls scan strictly below the radius and grow with it
    - the minimum positive distance and the max bound behave as stated
    - exact-mode convergence is eventual constancy, with unique limits
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from semifix import (INF, ValidationError, check_matrix, orbit_diagnostics,
                     space_from_squared_difference, validate_space)

SQUARES_MATRIX = [[0, 1, 16], [1, 0, 9], [16, 9, 0]]


class TestValidation:
    def test_squares_matrix_is_valid(self):
        space = validate_space([0, 1, 4], SQUARES_MATRIX)
        assert space.size == 3
        assert space.dist[0][2] == 16

    def test_formula_builds_same_matrix(self, squares_space):
        assert [list(r) for r in squares_space.dist] == SQUARES_MATRIX

    def test_asymmetric_pair_reported(self):
        violations = check_matrix([[0, 1], [2, 0]])
        assert len(violations) == 1
        assert violations[0].rule == "symmetry"
        assert violations[0].where == (0, 1)

    def test_zero_off_diagonal_reported(self):
        violations = check_matrix([[0, 0], [0, 0]])
        rules = {(v.rule, v.where) for v in violations}
        assert ("identity_of_indiscernibles", (0, 1)) in rules

    def test_nonzero_diagonal_reported(self):
        violations = check_matrix([[3, 1], [1, 0]])
        assert violations[0].rule == "identity_of_indiscernibles"
        assert violations[0].where == (0, 0)

    def test_negative_entry_reported(self):
        violations = check_matrix([[0, -2], [-2, 0]])
        assert {v.rule for v in violations} == {"nonnegativity"}

    def test_non_square_reported(self):
        violations = check_matrix([[0, 1, 2], [1, 0]])
        assert violations[0].rule == "square_shape"

    def test_validate_space_raises_with_all_violations(self):
        with pytest.raises(ValidationError) as err:
            validate_space(["a", "b"], [[0, 1], [2, 0]])
        assert err.value.violations[0].rule == "symmetry"

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValidationError):
            validate_space([0, 0], [[0, 1], [1, 0]])

    def test_single_point_space_accepted(self):
        space = validate_space(["only"], [[0]])
        assert space.min_positive_distance() == INF

    def test_float_mode_needs_tolerance_for_zero_tests(self):
        space = validate_space([0, 1], [[0.0, 0.5], [0.5, 0.0]],
                               mode="float", tolerance=1e-6)
        assert space.is_zero(1e-7)
        assert not space.is_zero(1e-5)

    def test_float_mode_rejects_nan(self):
        violations = check_matrix([[0.0, float("nan")], [float("nan"), 0.0]],
                                  mode="float")
        assert any(v.rule == "finiteness" for v in violations)


class TestDistances:
    def test_golden_lookups(self, squares_space):
        assert squares_space.distance(1, 4) == 9
        assert squares_space.distance(0, 0) == 0
        assert squares_space.distance(4, 0) == 16

    def test_unknown_label(self, squares_space):
        with pytest.raises(KeyError):
            squares_space.distance(0, 7)

    def test_symmetry_and_positivity_everywhere(self, corpus):
        for inst in corpus[:50]:
            s = inst.space
            for i in range(s.size):
                assert s.d(i, i) == 0
                for j in range(i + 1, s.size):
                    assert s.d(i, j) == s.d(j, i) > 0

    def test_max_distance_attained(self, corpus):
        for inst in corpus[:50]:
            s = inst.space
            bound = s.max_distance
            pairs = [(i, j) for i in range(s.size) for j in range(s.size)]
            assert all(s.d(i, j) <= bound for i, j in pairs)
            assert any(s.d(i, j) == bound for i, j in pairs)


class TestOpenBalls:
    def test_golden_balls(self, squares_space):
        assert squares_space.open_ball(0, 2) == (0, 1)
        assert squares_space.open_ball(0, 1) == (0,)
        assert squares_space.open_ball(1, 100) == (0, 1, 4)

    def test_radius_must_be_positive(self, squares_space):
        with pytest.raises(ValueError):
            squares_space.open_ball(0, 0)
        with pytest.raises(ValueError):
            squares_space.open_ball(0, Fraction(-1, 2))

    def test_monotone_in_radius(self, squares_space):
        radii = [Fraction(1, 2), 1, 2, 5, 9, 10, 16, 17, 100]
        for center in squares_space.points:
            balls = [set(squares_space.open_ball(center, r)) for r in radii]
            for small, big in zip(balls, balls[1:]):
                assert small <= big


class TestMinPositiveDistance:
    def test_golden(self, squares_space):
        assert squares_space.min_positive_distance() == 1

    def test_two_points(self):
        space = validate_space(["a", "b"], [[0, 5], [5, 0]])
        assert space.min_positive_distance() == 5

    def test_three_values(self):
        space = validate_space(["a", "b", "c"], [[0, 2, 3], [2, 0, 7], [3, 7, 0]])
        assert space.min_positive_distance() == 2


class TestOrbitDiagnostics:
    def test_eventually_constant(self, squares_space):
        d = orbit_diagnostics(squares_space, [4, 1, 0, 0, 0], 0)
        assert d.converged and d.is_cauchy_tail and d.limit == 0

    def test_oscillation(self, squares_space):
        d = orbit_diagnostics(squares_space, [0, 1, 0, 1], 0)
        assert not d.converged and not d.is_cauchy_tail

    def test_constant(self, squares_space):
        d = orbit_diagnostics(squares_space, [4, 4, 4], 4)
        assert d.converged and d.limit == 4

    def test_limit_inferred_from_tail(self, squares_space):
        d = orbit_diagnostics(squares_space, [1, 4, 4])
        assert d.converged and d.limit == 4

    def test_empty_sequence(self, squares_space):
        with pytest.raises(ValueError):
            orbit_diagnostics(squares_space, [])

    def test_unknown_limit(self, squares_space):
        with pytest.raises(KeyError):
            orbit_diagnostics(squares_space, [0, 0], 7)

    def test_exact_convergence_is_eventual_constancy(self, squares_space):
        # in exact mode distinct points stay apart, so any convergent
        # sequence must end in a constant run
        seqs = [[0, 1, 4, 1, 1], [4, 0, 4, 0], [1], [0, 4, 4, 4]]
        for seq in seqs:
            for limit in squares_space.points:
                d = orbit_diagnostics(squares_space, seq, limit)
                tail_constant = all(x == limit for x in seq[-1:]) and any(
                    all(x == limit for x in seq[k:]) for k in range(len(seq)))
                assert d.converged == tail_constant

    def test_float_space_tolerant_convergence(self):
        space = space_from_squared_difference((0, 1, 4))
        fspace = validate_space([0, 1, 4],
                                [[float(v) for v in row] for row in space.dist],
                                mode="float", tolerance=1e-6)
        d = orbit_diagnostics(fspace, [4, 0, 0, 0], 0)
        assert d.converged and d.is_cauchy_tail
