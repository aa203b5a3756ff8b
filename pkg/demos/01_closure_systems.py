"""Closure systems from scratch: building, enumerating, combining.

A closure system is a ground set plus a rule assigning to every subset
its least closed superset.  This walkthrough builds a few systems by
hand, enumerates their closed-set lattices, and shows the structural
combinators: restriction, joins of systems, and chain retractions.
"""

from convexitylab import (
    ClosureSystem,
    GroundSet,
    MaximalChain,
    chain_retraction,
    interval_system,
    join_of_systems,
    maximal_chains,
    restrict,
)

# The intervals of the chain 0 < 1 < 2 form a closure system: the
# closure of a set of chain points is the stretch between its extremes.
system = interval_system(3)
lattice = system.enumerate_closed_sets()
print("closed sets of the interval system on a 3-chain:")
for mask in lattice.masks:
    print("  ", system.ground.format_set(mask))

print("close({0,2}) =", system.ground.format_set(system.close(0b101)))

# An extensional system is just a family of sets that is closed under
# intersection and contains the ground set.
ground = GroundSet(("a", "b", "c"))
nested = ClosureSystem.from_closed_family(ground, {0b000, 0b001, 0b011, 0b111})
print("\nnested family:", [ground.format_set(m) for m in sorted(nested.closed_family())])

# Restriction induces a system on a subset: closed sets are traces.
reduced = restrict(interval_system(5), 0b10101)
print(
    "\nintervals of a 5-chain restricted to {0,2,4} has",
    reduced.enumerate_closed_sets().size,
    "closed sets (an interval system on a 3-chain again)",
)

# Joining systems intersects their closed families.  Down-sets of the
# natural order joined with down-sets of the reversed order give back
# the intervals.
forward = ClosureSystem.from_closed_family(GroundSet.of_size(3), {0, 1, 0b011, 0b111})
backward = ClosureSystem.from_closed_family(GroundSet.of_size(3), {0, 0b100, 0b110, 0b111})
joined = join_of_systems([forward, backward])
print(
    "\njoin of the two prefix systems =",
    sorted(joined.closed_family()) == sorted(lattice.masks),
)

# Maximal chains of the lattice and the retraction onto one of them.
chains = maximal_chains(lattice, limit=10)
print("\nmaximal chains through the interval lattice:", len(chains))
d = MaximalChain((0b000, 0b010, 0b110, 0b111))
print(
    "retraction of {0} onto the chain (empty,{1},{1,2},all):",
    system.ground.format_set(chain_retraction(lattice, d, 0b001)),
)
