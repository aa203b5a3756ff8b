"""Point configurations with exact rational coordinates.

Relative convexity: the closed subsets of a finite point set X are the
traces C & X of convex sets C.  Everything below is decided exactly
over the rationals; there is no floating point and hence no epsilon.
"""

from fractions import Fraction

from convexitylab import (
    PointConfig,
    check_es5,
    dimension_sandwich_report,
    hull_membership,
    is_convex_geometry,
    max_convexly_independent,
    min_line_cover,
    relconvex_system,
)

square = PointConfig.from_coords(2, [(0, 0), (1, 0), (1, 1), (0, 1)], "ABCD")
print("every subset of the square corners is relatively convex:",
      relconvex_system(square).enumerate_closed_sets().size == 16)

centered = PointConfig.from_coords(
    2, [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)], "ABCDO"
)
print("center inside the big square:", hull_membership(centered, 0b01111, 4))
print("relconvex systems are convex geometries:",
      is_convex_geometry(relconvex_system(centered)).holds)

# Convex independence: no point inside the hull of the others.
collinear = PointConfig.from_coords(2, [(i, 0) for i in range(3)])
print("\n3 collinear points: largest convexly independent subset",
      max_convexly_independent(collinear)[0])

two_rows = PointConfig.from_coords(
    2, [(i, 0) for i in range(4)] + [(i, 1) for i in range(4)]
)
size, witness = max_convexly_independent(two_rows)
print("8 points on two parallel lines: independent", size,
      "witness", [two_rows.labels[i] for i in witness])

# Minimum number of lines covering all points, with exact witnesses.
count, lines = min_line_cover(two_rows)
print("line cover size:", count)
for line in lines:
    print("   base", tuple(map(str, line.base)), "direction", line.direction)

# Any five points in general position contain four in convex position.
fan = PointConfig.from_coords(
    2, [(0, 0), (7, 1), (5, 4), (2, 6), (-3, 3), (1, 1), (3, 2)]
)
print("\nfive-point convex-position property:", check_es5(fan).holds)

# The independent size never exceeds twice the line-cover size.
ind, line_count, verdict = dimension_sandwich_report(two_rows)
print("independent", ind, "<= 2 * lines", 2 * line_count, ":", verdict.holds)

# Exact rationals mean exact verdicts, e.g. a point one hair off a
# segment is decisively outside.
hair = PointConfig.from_coords(
    2,
    [(0, 0), (2, 0), (1, Fraction(1, 10**12))],
    ("a", "b", "off"),
)
print("\nhair-off-segment point inside?",
      hull_membership(hair, 0b011, 2))
