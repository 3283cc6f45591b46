"""Brute-force oracles and the deterministic instance generator.

Core claims:
    - the naive set distance, best ratio and fixed scan match hand values
    - generation is bit-reproducible per seed and always passes validators
    - generated distances are distinct integers in [1, 100]
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from semifix import (SetMap, brute_fixed_points, brute_hausdorff,
                     brute_lambda_star, random_instance)
from semifix.cli import build_problem


class TestBruteValues:
    def test_hausdorff_golden(self, squares_space, squares_family):
        bar0 = squares_family.member("bar0")
        bar1 = squares_family.member("bar1")
        bar4 = squares_family.member("bar4")
        assert brute_hausdorff(squares_space, bar0, bar4) == 16
        assert brute_hausdorff(squares_space, bar1, bar4) == 9
        assert brute_hausdorff(squares_space, bar1, bar1) == 0

    def test_lambda_star_golden(self, squares_space, squares_family, squares_map):
        assert brute_lambda_star(squares_space, squares_family,
                                 squares_map) == Fraction(1, 9)

    def test_lambda_star_constant_and_identity(self, squares_space,
                                               squares_family):
        assert brute_lambda_star(squares_space, squares_family,
                                 SetMap((0, 0, 0))) == 0
        assert brute_lambda_star(squares_space, squares_family,
                                 SetMap((0, 1, 2))) == 1

    def test_fixed_points_golden(self, squares_family, squares_map, cycle_map):
        assert brute_fixed_points(squares_family, squares_map) == (0,)
        assert brute_fixed_points(squares_family, SetMap((0, 1, 2))) == (0, 1, 2)
        assert brute_fixed_points(squares_family, cycle_map) == ()

    def test_empty_set_rejected(self, squares_space):
        with pytest.raises(ValueError):
            brute_hausdorff(squares_space, (), (0,))


class TestGenerator:
    def test_same_seed_same_instance(self):
        a = random_instance(1, 3, "powerset", 0.5)
        b = random_instance(1, 3, "powerset", 0.5)
        assert a.space.dist == b.space.dist
        assert a.graph.edges == b.graph.edges
        assert a.family.members == b.family.members
        assert a.tmap.table == b.tmap.table

    def test_different_seeds_both_valid(self):
        # construction re-runs every validator; getting here is the check
        a = random_instance(1, 3, "powerset", 0.5)
        b = random_instance(2, 3, "powerset", 0.5)
        assert len(a.family) == len(b.family) == 7

    def test_singletons_at_full_density(self):
        inst = random_instance(7, 2, "singletons", 1.0)
        assert len(inst.graph.edges) == 4  # both loops plus both directions
        assert inst.family.names == ("s0", "s1")

    def test_distances_distinct_integers(self):
        for seed in range(1, 30):
            inst = random_instance(seed, 5, "powerset", 0.5)
            off_diag = sorted(inst.space.d(i, j)
                              for i in range(5) for j in range(i + 1, 5))
            assert all(isinstance(v, int) and 1 <= v <= 100 for v in off_diag)
            assert len(set(off_diag)) == len(off_diag)

    def test_parameter_ranges(self):
        with pytest.raises(ValueError):
            random_instance(1, 9, "powerset", 0.5)
        with pytest.raises(ValueError):
            random_instance(1, 3, "powerset", 1.5)
        with pytest.raises(ValueError):
            random_instance(1, 3, "nonsense", 0.5)

    def test_as_problem_round_trips_through_parser(self):
        inst = random_instance(11, 3, "powerset", 0.5)
        problem = build_problem(inst.as_problem())
        assert problem.space.dist == inst.space.dist
        assert problem.graph.edges == inst.graph.edges
        assert problem.family.members == inst.family.members
        assert problem.tmap.table == inst.tmap.table
