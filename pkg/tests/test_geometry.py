"""Convex-geometry verdicts and structural criteria."""

import random
from itertools import permutations

import pytest

from conftest import (
    lattices_order_isomorphic,
    random_intersection_closed_family,
    system_of_family,
)
from convexitylab import (
    ClosureSystem,
    GroundSet,
    InputError,
    antimatroid_from_distributive,
    boolean_lattice,
    chain_lattice,
    check_anti_exchange,
    check_convexity_characterization,
    check_cover_structure,
    check_super_solvable,
    check_zero_closed,
    convex_geometry_from_lattice,
    downset_lattice,
    find_sublattice_copy,
    find_super_solvable_order,
    initial_system,
    interval_system,
    is_convex_geometry,
    is_distributive,
    is_modular,
    join_of_systems,
    m3,
    n5,
    spatial_support_reduction,
    subsemilattice_system,
    suborder_system,
)
from convexitylab.geometry import Verdict, antimatroid_dual_map
from convexitylab.lattices import as_lattice
from convexitylab.posets import FinitePoset
from convexitylab.relconvex import PointConfig, relconvex_system

THREE_ATOMS = {0, 0b001, 0b010, 0b100, 0b111}


def three_atom_system():
    return ClosureSystem.from_closed_family(GroundSet(("a", "b", "c")), THREE_ATOMS)


def test_verdict_shape():
    with pytest.raises(InputError):
        Verdict(True, {"spurious": 1})
    with pytest.raises(InputError):
        Verdict(False, None)


def test_zero_closed():
    assert check_zero_closed(interval_system(3)).holds
    bad = ClosureSystem.from_closed_family(GroundSet.of_size(2), {0b01, 0b11})
    verdict = check_zero_closed(bad)
    assert not verdict.holds
    assert verdict.witness["close_empty"] == ("0",)
    constructed = antimatroid_from_distributive(boolean_lattice(2))
    assert check_zero_closed(constructed).holds


def test_anti_exchange_interval():
    assert check_anti_exchange(interval_system(3)).holds


def test_anti_exchange_three_atoms_witness():
    verdict = check_anti_exchange(three_atom_system())
    assert not verdict.holds
    assert verdict.witness == {
        "kind": "anti-exchange",
        "closed_set": ("a",),
        "x": "b",
        "y": "c",
    }


def test_anti_exchange_relconvex_random_planar():
    rng = random.Random(5)
    for _ in range(10):
        pts = set()
        while len(pts) < 6:
            pts.add((rng.randrange(-4, 5), rng.randrange(-4, 5)))
        config = PointConfig.from_coords(2, sorted(pts))
        assert check_anti_exchange(relconvex_system(config)).holds


def test_is_convex_geometry_examples():
    assert is_convex_geometry(subsemilattice_system(FinitePoset.chain(2))).holds
    assert not is_convex_geometry(three_atom_system()).holds
    assert is_convex_geometry(suborder_system(FinitePoset.chain(2))).holds


def test_cover_structure_examples():
    assert check_cover_structure(interval_system(3).enumerate_closed_sets()).holds
    square = PointConfig.from_coords(2, [(0, 0), (1, 0), (1, 1), (0, 1)])
    assert check_cover_structure(
        relconvex_system(square).enumerate_closed_sets()
    ).holds
    powerset = ClosureSystem.from_closed_family(GroundSet.of_size(3), range(8))
    assert check_cover_structure(powerset.enumerate_closed_sets()).holds


def test_cover_structure_witness_on_wide_cover():
    bad = ClosureSystem.from_closed_family(GroundSet.of_size(2), {0, 0b11})
    verdict = check_cover_structure(bad.enumerate_closed_sets())
    assert not verdict.holds
    assert verdict.witness["kind"] == "cover-width"


def test_claims_cover_structure_holds_for_all_small_geometries(families4):
    # every convex geometry has single-point covers with join-irreducible
    # singleton closures
    for fam in families4:
        system = system_of_family(fam, 4)
        if is_convex_geometry(system).holds:
            assert check_cover_structure(system.enumerate_closed_sets()).holds


def test_claims_cover_structure_on_five_element_geometries():
    from convexitylab import multichain_system, bichain_from_permutation

    five_ground = [
        interval_system(5),
        initial_system(5),
        multichain_system(bichain_from_permutation((3, 1, 4, 0, 2))),
        relconvex_system(
            PointConfig.from_coords(2, [(0, 0), (1, 0), (2, 0), (1, 1), (3, 2)])
        ),
        subsemilattice_system(
            FinitePoset.from_covers(
                ("0", "a", "b", "c", "d"), [(0, 1), (0, 2), (1, 3), (2, 3), (0, 4)]
            )
        ),
    ]
    for system in five_ground:
        assert is_convex_geometry(system).holds
        assert check_cover_structure(system.enumerate_closed_sets()).holds


def test_spatial_support_reduction_identity_cases():
    for system in (
        interval_system(3),
        relconvex_system(PointConfig.from_coords(2, [(0, 0), (1, 0), (2, 0)])),
    ):
        reduction = spatial_support_reduction(system)
        assert reduction.support == system.ground.full_mask
        assert sorted(reduction.set_map) == sorted(
            system.enumerate_closed_sets().masks
        )
        assert len(set(reduction.set_map.values())) == len(reduction.set_map)


def test_spatial_support_reduction_is_order_isomorphism():
    system = interval_system(4)
    reduction = spatial_support_reduction(system)
    masks = sorted(reduction.set_map)
    for a in masks:
        for b in masks:
            assert (a & ~b == 0) == (
                reduction.set_map[a] & ~reduction.set_map[b] == 0
            )


def test_spatial_support_reduction_rejects_non_geometry():
    with pytest.raises(InputError):
        spatial_support_reduction(three_atom_system())


def test_characterization_examples():
    assert check_convexity_characterization(
        interval_system(3).enumerate_closed_sets()
    ).holds
    verdict = check_convexity_characterization(m3())
    assert not verdict.holds
    assert verdict.witness == {
        "kind": "join-cancellation",
        "y": "a",
        "u": "b",
        "v": "c",
    }
    assert check_convexity_characterization(boolean_lattice(3)).holds


def test_geometry_implies_characterization(families3):
    for fam in families3:
        system = system_of_family(fam, 3)
        if is_convex_geometry(system).holds:
            assert check_convexity_characterization(
                system.enumerate_closed_sets()
            ).holds


def test_characterization_gives_constructive_geometry(families3):
    for fam in families3:
        lattice = system_of_family(fam, 3).enumerate_closed_sets()
        if check_convexity_characterization(lattice).holds:
            constructed = convex_geometry_from_lattice(lattice)
            assert is_convex_geometry(constructed).holds
            assert lattices_order_isomorphic(
                as_lattice(constructed.enumerate_closed_sets()), as_lattice(lattice)
            )


def test_convex_geometry_from_lattice_examples():
    two_free_points = convex_geometry_from_lattice(boolean_lattice(2))
    assert two_free_points.closed_family() == frozenset(range(4))

    from_chain = convex_geometry_from_lattice(chain_lattice(3))
    assert from_chain.closed_family() == initial_system(2).closed_family()

    lattice = interval_system(3).enumerate_closed_sets()
    round_trip = convex_geometry_from_lattice(lattice)
    assert lattices_order_isomorphic(
        as_lattice(round_trip.enumerate_closed_sets()), as_lattice(lattice)
    )


def test_convex_geometry_from_lattice_rejects_m3():
    with pytest.raises(InputError):
        convex_geometry_from_lattice(m3())


def test_super_solvable_examples():
    system = interval_system(3)
    assert check_super_solvable(system, (0, 2, 1)).holds
    verdict = check_super_solvable(system, (0, 1, 2))
    assert not verdict.holds
    assert verdict.witness == {
        "kind": "super-solvable",
        "A": ("0", "1", "2"),
        "B": ("0",),
        "a": "1",
    }
    powerset = ClosureSystem.from_closed_family(GroundSet.of_size(3), range(8))
    for ordering in permutations(range(3)):
        assert check_super_solvable(powerset, ordering).holds


def test_find_super_solvable_order_matches_exhaustive():
    system = interval_system(3)
    passing = [
        ordering
        for ordering in permutations(range(3))
        if check_super_solvable(system, ordering).holds
    ]
    found = find_super_solvable_order(system)
    assert found in passing
    assert found == min(passing)


def test_find_super_solvable_order_on_meet_subsemilattices():
    system = subsemilattice_system(FinitePoset.chain(3))
    found = find_super_solvable_order(system)
    assert found is not None
    assert check_super_solvable(system, found).holds


def test_distributive_modular_named():
    assert is_distributive(boolean_lattice(3)).holds
    assert is_modular(boolean_lattice(3)).holds
    m3_verdict = is_distributive(m3())
    assert not m3_verdict.holds and m3_verdict.witness["kind"] == "M3"
    assert is_modular(m3()).holds
    n5_verdict = is_distributive(n5())
    assert not n5_verdict.holds and n5_verdict.witness["kind"] == "N5"
    assert not is_modular(n5()).holds


def test_forbidden_sublattice_search_cross_validates(lattice_corpus):
    for lattice in lattice_corpus[:120]:
        dist = is_distributive(lattice).holds
        mod = is_modular(lattice).holds
        has_m3 = find_sublattice_copy(lattice, "M3") is not None
        has_n5 = find_sublattice_copy(lattice, "N5") is not None
        assert dist == (not has_m3 and not has_n5)
        assert mod == (not has_n5)


def test_antimatroid_from_boolean_two_atoms():
    system = antimatroid_from_distributive(boolean_lattice(2))
    assert system.ground.size == 2
    assert system.closed_family() == frozenset(range(4))
    assert check_anti_exchange(system).holds


def test_antimatroid_from_chain_gives_final_segments():
    system = antimatroid_from_distributive(chain_lattice(4))
    assert system.ground.size == 3
    full = system.ground.full_mask
    expected = {full & ~((1 << i) - 1) for i in range(4)}
    assert system.closed_family() == expected


def test_antimatroid_from_fence_downsets_passes_anti_exchange():
    fence = FinitePoset.from_covers(("a", "b", "c"), [(0, 1), (2, 1)])
    system = antimatroid_from_distributive(downset_lattice(fence))
    assert check_anti_exchange(system).holds
    assert check_zero_closed(system).holds


def test_antimatroid_rejects_non_distributive():
    with pytest.raises(InputError):
        antimatroid_from_distributive(m3())


def test_antimatroid_dual_isomorphism(posets4):
    for poset in posets4[::5]:
        lattice = downset_lattice(poset)
        system = antimatroid_from_distributive(lattice)
        dual = antimatroid_dual_map(lattice)
        family = system.closed_family()
        assert set(dual.values()) == family
        assert len(set(dual.values())) == lattice.size
        for x in range(lattice.size):
            for y in range(lattice.size):
                assert lattice.leq(x, y) == (dual[y] & ~dual[x] == 0)


def test_join_of_convex_geometries_is_convex_geometry():
    rng = random.Random(23)
    produced = 0
    while produced < 20:
        n = rng.randrange(2, 6)
        fam_a = random_intersection_closed_family(rng, n)
        fam_b = random_intersection_closed_family(rng, n)
        a = system_of_family(fam_a, n)
        b = system_of_family(fam_b, n)
        if not (is_convex_geometry(a).holds and is_convex_geometry(b).holds):
            continue
        produced += 1
        assert is_convex_geometry(join_of_systems([a, b])).holds
