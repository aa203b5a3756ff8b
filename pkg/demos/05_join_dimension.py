"""Join-dimension: how many chains does a join-embedding need?

The diamond with three atoms order-embeds into two chains, yet any
join-preserving embedding needs three.  The general computation covers
the meet-irreducible elements by as few chains as possible; the
brute-force search confirms the count independently.
"""

from convexitylab import (
    boolean_lattice,
    brute_force_join_dimension,
    chain_lattice,
    embed_via_chain_covers,
    join_dimension,
    m3,
    meet_irreducibles,
    min_chain_cover,
    verify_duality,
)

diamond = m3()
print("meet-irreducibles of the diamond:",
      [diamond.labels[i] for i in meet_irreducibles(diamond)])
print("join dimension:", join_dimension(diamond))
print("brute-force dimension:", brute_force_join_dimension(diamond.to_join_semilattice()))
print("with only two chains:", brute_force_join_dimension(diamond.to_join_semilattice(), k_max=2))

cover = min_chain_cover(diamond, meet_irreducibles(diamond))
print("\nminimum chain cover of the meet-irreducibles:", cover.chains)
print("matching antichain witness:", [diamond.labels[i] for i in cover.antichain])

embedding = embed_via_chain_covers(diamond, cover)
print("extended maximal chains:")
for chain in embedding.chains:
    print("  ", [diamond.labels[e] for e in chain])
print("join-preserving:", embedding.verify_join_preserving(diamond))

# Chains and boolean lattices for contrast.
for name, lattice in (
    ("chain of 5", chain_lattice(5)),
    ("boolean on 2 atoms", boolean_lattice(2)),
    ("boolean on 3 atoms", boolean_lattice(3)),
):
    print(f"\n{name}: dimension {join_dimension(lattice)}",
          f"(brute force {brute_force_join_dimension(lattice.to_join_semilattice())})")

# Duality: the minimum over meet-dense subsets of their chain-cover
# size equals the dimension.
print("\nduality verified on the diamond:", verify_duality(diamond).holds)
