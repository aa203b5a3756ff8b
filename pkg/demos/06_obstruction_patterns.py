"""Pattern detection inside join-semilattices.

Whether the powerset semilattice boolean(k), the interval semilattice
of a chain, or an omega prefix embeds as a join-subsemilattice into a
host tells the host's structure apart.  The searches below report
lexicographically least embeddings and re-verify each one.
"""

from convexitylab import (
    boolean_pattern,
    chain_lattice,
    compact_semilattice_of_geometry,
    embeds_as_join_subsemilattice,
    independent_sets,
    interval_chain_pattern,
    interval_system,
    obstruction_report,
    subsemilattice_system,
)
from convexitylab.posets import FinitePoset

host = compact_semilattice_of_geometry(interval_system(5))
print("host: compact semilattice of the interval system on a 5-chain,",
      host.size, "elements")

report = obstruction_report(host, max_boolean=3, max_omega=2)
print("boolean(k) embeds:", report.boolean_embeds)
print("omega prefixes embed:", report.omega_embeds)
for name, embedding in sorted(report.embeddings.items()):
    print(f"  {name}: {[host.labels[h] for h in embedding.assignment]}")

chain_host = chain_lattice(6).to_join_semilattice()
chain_report = obstruction_report(chain_host, max_boolean=2, max_omega=2)
print("\nchains host almost nothing:", chain_report.boolean_embeds,
      chain_report.omega_embeds)

# Independent sets witness boolean patterns inside closed-set lattices:
# closures of subsets of an independent set order-embed a powerset.
interval = interval_system(6)
print("\nlargest independent set of the interval system:",
      independent_sets(interval))

bottomed = FinitePoset.from_covers(("0", "a", "b", "c"), [(0, 1), (0, 2), (0, 3)])
sub = subsemilattice_system(bottomed)
print("meet-subsemilattice system of an antichain over a bottom:",
      independent_sets(sub))

pattern = interval_chain_pattern(2).semilattice
print("\ninterval pattern of a 2-chain:", pattern.labels)
found = embeds_as_join_subsemilattice(pattern, host)
print("embeds into the interval host:",
      [host.labels[h] for h in found.assignment])

b2 = boolean_pattern(2).semilattice
print("boolean(2) into the interval host:",
      [host.labels[h] for h in embeds_as_join_subsemilattice(b2, host).assignment])
