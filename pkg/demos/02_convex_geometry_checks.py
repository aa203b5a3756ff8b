"""Deciding convex-geometry membership and the lattice-level criteria.

A convex geometry is a zero-closed closure system with the
anti-exchange property.  The checks below show passing and failing
inputs with their witnesses, the characterization of the lattices that
arise from convex geometries, super solvability, and the antimatroid
obtained from a distributive lattice.
"""

from convexitylab import (
    ClosureSystem,
    GroundSet,
    antimatroid_from_distributive,
    boolean_lattice,
    check_anti_exchange,
    check_convexity_characterization,
    check_cover_structure,
    check_super_solvable,
    convex_geometry_from_lattice,
    find_super_solvable_order,
    interval_system,
    is_convex_geometry,
    is_distributive,
    is_modular,
    m3,
    spatial_support_reduction,
)

interval = interval_system(3)
print("interval system is a convex geometry:", is_convex_geometry(interval).holds)

# Three atoms whose closure jumps straight to the top violate
# anti-exchange: b and c exchange over {a}.
atoms = ClosureSystem.from_closed_family(
    GroundSet(("a", "b", "c")), {0, 0b001, 0b010, 0b100, 0b111}
)
verdict = check_anti_exchange(atoms)
print("three-atom system verdict:", verdict.holds, "witness:", verdict.witness)

# Every cover in a convex geometry's lattice adds a single point whose
# closure is join-irreducible.
print("cover structure:", check_cover_structure(interval.enumerate_closed_sets()).holds)

# The support of join-irreducible singleton closures carries the whole
# structure; for convex geometries the reduction is the identity.
reduction = spatial_support_reduction(interval)
print("support mask of the reduction:", bin(reduction.support))

# Lattice-level characterization: a finite lattice is the closed-set
# lattice of some convex geometry iff join-irreducibles cancel:
# y < y v u = y v v forces u = v.
print("interval lattice passes:", check_convexity_characterization(interval.enumerate_closed_sets()).holds)
diamond = m3()
print("diamond fails with witness:", check_convexity_characterization(diamond).witness)

rebuilt = convex_geometry_from_lattice(boolean_lattice(2))
print("geometry rebuilt from the 4-element boolean lattice:",
      sorted(rebuilt.closed_family()))

# Super solvability asks for an ordering of the points so that closed
# sets peel from the least new element.
print("ordering 0,2,1 works:", check_super_solvable(interval, (0, 2, 1)).holds)
print("natural ordering fails:", check_super_solvable(interval, (0, 1, 2)).witness)
print("search finds:", find_super_solvable_order(interval))

# Distributive lattices turn into antimatroids on their
# meet-irreducible elements.
print("\nboolean(2) modular/distributive:",
      is_modular(boolean_lattice(2)).holds, is_distributive(boolean_lattice(2)).holds)
antimatroid = antimatroid_from_distributive(boolean_lattice(2))
print("antimatroid on the two coatoms, closed sets:",
      sorted(antimatroid.closed_family()))
print("it satisfies anti-exchange:", check_anti_exchange(antimatroid).holds)
