"""Bichains, their geometries, and the diagonal semilattice.

Two linear orders on one ground set (a bichain, encodable as a
permutation) generate a convex geometry: the join of the two systems
of down-sets.  The compact elements of that geometry form the
join-semilattice generated by the diagonal in the product of the two
chains, with a bottom adjoined.
"""

from convexitylab import (
    bichain_from_permutation,
    compact_semilattice_of_geometry,
    delta_semilattice,
    embeds_as_join_subsemilattice,
    multichain_system,
    omega_prefix,
)

sigma = (2, 0, 3, 1)
bichain = bichain_from_permutation(sigma)
print("permutation", sigma, "-> second order ranks", bichain.orders[1])

geometry = multichain_system(bichain)
lattice = geometry.enumerate_closed_sets()
print("closed sets of the bichain geometry:", lattice.size)

delta = delta_semilattice(bichain)
print("diagonal semilattice elements:")
for label in delta.labels:
    print("  ", label)

delta_hat = delta.with_bottom()
compact = compact_semilattice_of_geometry(geometry)
iso = embeds_as_join_subsemilattice(delta_hat, compact)
print("compact semilattice is the diagonal one plus bottom:",
      iso is not None and compact.size == delta_hat.size)

# The omega prefix: levels n = 0..N, level n holding the dyadics
# k / 2**n.  Join is componentwise, and from depth 2 on the order has
# incomparable pairs, so no chain hosts it.
for depth in (0, 1, 2):
    om = omega_prefix(depth)
    print(f"\nomega prefix depth {depth}:", [om.label(e) for e in om.elements])

pattern = omega_prefix(2).semilattice()

# The bit-reversal permutation on 8 points interleaves the second order
# the way the dyadics interleave, and its geometry hosts the prefix.
bitrev = [int(format(i, "03b")[::-1], 2) for i in range(8)]
host = compact_semilattice_of_geometry(
    multichain_system(bichain_from_permutation(bitrev))
)
found = embeds_as_join_subsemilattice(pattern, host)
print("\ndepth-2 prefix embeds into the bit-reversal-8 geometry:")
for p, h in enumerate(found.assignment):
    print("  ", pattern.labels[p], "->", host.labels[h])
