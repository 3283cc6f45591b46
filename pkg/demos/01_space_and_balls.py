#!/usr/bin/env python3
"""A finite semi-metric space: axioms, balls and sequence diagnostics.

The running example is three points {0, 1, 4} under d(x, y) = (x - y)^2.
This distance is symmetric and separates points but breaks the triangle
inequality: d(0, 4) = 16 > 10 = d(0, 1) + d(1, 4).  Nothing downstream
ever assumes that inequality.
"""

from fractions import Fraction

from semifix import (check_matrix, orbit_diagnostics,
                     space_from_squared_difference, validate_space)

print("=" * 72)
print("1. Building and validating the squares space")
print("=" * 72)

space = space_from_squared_difference((0, 1, 4))
for row, point in zip(space.dist, space.points):
    print(f"  d({point}, .) = {list(row)}")
print(f"  triangle inequality broken: d(0,4)={space.distance(0, 4)} "
      f"> d(0,1)+d(1,4)={space.distance(0, 1) + space.distance(1, 4)}")
print(f"  max distance (the finite bound): {space.max_distance}")
print(f"  min positive distance: {space.min_positive_distance()}")

print()
print("=" * 72)
print("2. What validation rejects")
print("=" * 72)

for label, matrix in [
    ("asymmetric pair", [[0, 1], [2, 0]]),
    ("zero off-diagonal", [[0, 0], [0, 0]]),
    ("nonzero diagonal", [[3, 1], [1, 0]]),
    ("negative entry", [[0, -2], [-2, 0]]),
]:
    violations = check_matrix(matrix)
    print(f"  {label}: {violations[0]}")

print()
print("=" * 72)
print("3. Open balls grow with the radius")
print("=" * 72)

for rho in (Fraction(1, 2), 1, 2, 10, 17):
    print(f"  B(0, {rho}) = {space.open_ball(0, rho)}")

print()
print("=" * 72)
print("4. Sequence diagnostics at finite scale")
print("=" * 72)

for seq, limit in [([4, 1, 0, 0, 0], 0), ([0, 1, 0, 1], 0), ([4, 4, 4], 4)]:
    d = orbit_diagnostics(space, seq, limit)
    print(f"  {seq} vs limit {limit}: converged={d.converged}, "
          f"mutually-close tail={d.is_cauchy_tail}")

print()
print("Exact mode keeps distinct points apart, so convergence is exactly")
print("eventual constancy; float spaces use an explicit tolerance instead:")
fspace = validate_space([0, 1], [[0.0, 2.5], [2.5, 0.0]],
                        mode="float", tolerance=1e-6)
print(f"  float-mode zero test: is_zero(1e-7) = {fspace.is_zero(1e-7)}, "
      f"is_zero(0.1) = {fspace.is_zero(0.1)}")
