import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biclosure import (
    BoundExceeded,
    InvalidOrthoMap,
    NotALattice,
    NotBounded,
    Subspace,
    chain,
    dual_space,
    enumerate_posets,
    filter_of,
    filters_wrt,
    find_orthocomplementations,
    generated_filter,
    generated_ideal,
    ideal_of,
    ideals_wrt,
    is_full,
    is_separating,
    lattice_dual,
    orthodual_space,
    remove_constants,
)
from biclosure.bitops import bits, mask_of

import oracles

small_catalog = [p for n in range(1, 5) for p in enumerate_posets(n)]
tiny_catalog = [p for n in range(1, 4) for p in enumerate_posets(n)]


def as_sets(subspace):
    return {frozenset(bits(s)) for s in subspace.points}


# --- construction -----------------------------------------------------------------


def test_dual_space_matches_brute_enumeration():
    for p in small_catalog:
        want = oracles.brute_isotone_01_maps(p.n, oracles.leq_fn(p))
        assert as_sets(dual_space(p)) == want


def test_known_dual_sizes(two_chain, pair, vee, b4, m4):
    assert dual_space(two_chain).size == 3
    assert dual_space(pair).size == 4
    assert dual_space(vee).size == 5
    assert dual_space(b4).size == 6
    assert dual_space(m4).size == 18


def test_dual_cap_is_enforced(b4):
    with pytest.raises(BoundExceeded):
        dual_space(b4, cap=3)


def test_points_must_be_upsets(two_chain):
    # {0} is a down-set of the chain 0 < 1, not an up-set
    with pytest.raises(ValueError):
        Subspace(two_chain, [0b01])
    Subspace(two_chain, [0b10])  # fine


def test_points_must_fit_the_carrier(two_chain):
    with pytest.raises(ValueError):
        Subspace(two_chain, [0b100])


def test_points_dedup_and_sort(b4):
    sub = Subspace(b4, [b4.full, 0, b4.full])
    assert sub.points == (0, b4.full)
    assert sub.size == 2


def test_kernel_cokernel_partition_carrier(b4):
    star = dual_space(b4)
    for i in range(star.size):
        assert star.kernel(i) | star.cokernel(i) == b4.full
        assert star.kernel(i) & star.cokernel(i) == 0


def test_up_image_lists_points_that_are_one_there(m3):
    star = dual_space(m3)
    for p in range(m3.n):
        img = star.up_image(p)
        for i in range(star.size):
            assert bool(img >> i & 1) == bool(star.points[i] >> p & 1)
        assert star.lo_image(p) == star.all_mask ^ img


def test_restrict_keeps_selected_points(b4):
    star = dual_space(b4)
    sub = star.restrict(0b101)
    assert sub.points == (star.points[0], star.points[2])


# --- ideals and filters -------------------------------------------------------------


def test_ideal_family_matches_brute_intersections():
    for p in tiny_catalog:
        star = dual_space(p)
        one_sets = [frozenset(bits(s)) for s in star.points]
        want = oracles.brute_ideal_family(one_sets, p.n)
        got = {frozenset(bits(m)) for m in ideals_wrt(star).members}
        assert got == want
        want_f = oracles.brute_filter_family(one_sets, p.n)
        got_f = {frozenset(bits(m)) for m in filters_wrt(star).members}
        assert got_f == want_f


def test_ideals_of_full_dual_are_the_downsets(b4):
    star = dual_space(b4)
    downs = {b4.full ^ s for s in star.points}
    assert set(ideals_wrt(star).members) == downs
    assert set(filters_wrt(star).members) == set(star.points)


def test_empty_selection_yields_full_carrier(b4):
    star = dual_space(b4)
    assert ideal_of(star, 0) == b4.full
    assert filter_of(star, 0) == b4.full


def test_selection_intersects_kernels(b4):
    star = dual_space(b4)
    idx = mask_of([1, 3])
    assert ideal_of(star, idx) == star.kernel(1) & star.kernel(3)
    assert filter_of(star, idx) == star.points[1] & star.points[3]


def test_generated_ideal_is_smallest_container(m3):
    star = dual_space(m3)
    fam = ideals_wrt(star)
    for p in range(m3.n):
        hull = generated_ideal(star, 1 << p, fam)
        assert hull.found
        assert hull.subset & (1 << p)
        for m in fam.members:
            if m >> p & 1:
                assert hull.subset & ~m == 0


def test_generated_ideal_without_container_degenerates(b4):
    f = find_orthocomplementations(b4)[0]
    od = orthodual_space(b4, f)
    top = b4.index("{0,1}")
    hull = generated_ideal(od, 1 << top)
    assert hull == (b4.full, False)


def test_generated_cones_over_orthodual_are_order_cones(b4, m4):
    for p, f in [(b4, find_orthocomplementations(b4)[0])] + [
        (m4, g) for g in find_orthocomplementations(m4)
    ]:
        od = orthodual_space(p, f)
        fam_i = ideals_wrt(od)
        fam_f = filters_wrt(od)
        for e in range(p.n):
            assert generated_ideal(od, 1 << e, fam_i).subset == p.down[e]
            assert generated_filter(od, 1 << e, fam_f).subset == p.up[e]


# --- fullness and separation ----------------------------------------------------------


def test_full_dual_space_is_full_and_separating():
    for p in small_catalog:
        star = dual_space(p)
        ok, witness = is_full(star)
        assert ok and witness is None
        ok, witness = is_separating(star)
        assert ok and witness is None


def test_fullness_witness_names_an_unwitnessed_pair(b4):
    star = dual_space(b4)
    constants_only = star.restrict(
        mask_of([star.index_of(0), star.index_of(b4.full)])
    )
    ok, witness = is_full(constants_only)
    assert not ok
    p, q = witness
    assert not b4.leq(p, q)


@settings(max_examples=60)
@given(st.sampled_from(tiny_catalog), st.data())
def test_fullness_matches_oracle(p, data):
    star = dual_space(p)
    sub = star.restrict(data.draw(st.integers(0, star.all_mask)))
    one_sets = [set(bits(s)) for s in sub.points]
    assert is_full(sub)[0] == oracles.brute_is_full(
        one_sets, p.n, oracles.leq_fn(p)
    )


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(tiny_catalog), st.data())
def test_separation_matches_oracle(p, data):
    star = dual_space(p)
    sub = star.restrict(data.draw(st.integers(0, star.all_mask)))
    one_sets = [set(bits(s)) for s in sub.points]
    assert is_separating(sub)[0] == oracles.brute_is_separating(one_sets, p.n)


def nearly_flat():
    # four elements, p0 < p3 the only relation; the smallest shapes are
    # all separating no matter which points are kept, this one is not
    from biclosure import build_poset

    return build_poset(["p0", "p1", "p2", "p3"], [("p0", "p3")])


def test_non_separating_subspace_is_detected():
    p = nearly_flat()
    sub = Subspace(
        p,
        [mask_of(s) for s in ([1], [3], [0, 1, 3], [1, 2, 3])],
    )
    ok, witness = is_separating(sub)
    assert not ok
    one_sets = [set(bits(s)) for s in sub.points]
    assert not oracles.brute_is_separating(one_sets, p.n)


def test_separation_witness_is_a_disjoint_unseparated_pair():
    p = nearly_flat()
    sub = Subspace(
        p,
        [mask_of(s) for s in ([1], [3], [0, 1, 3], [1, 2, 3])],
    )
    ok, (ideal, filt) = is_separating(sub)
    assert not ok
    assert ideal & filt == 0
    for s in sub.points:
        separated = filt & ~s == 0 and ideal & s == 0
        assert not separated


# --- derived subspaces ------------------------------------------------------------------


def test_remove_constants_drops_exactly_two(b4):
    star = dual_space(b4)
    trimmed = remove_constants(star)
    assert trimmed.size == star.size - 2
    assert 0 not in trimmed.points
    assert b4.full not in trimmed.points


def test_remove_constants_requires_bounds(vee):
    with pytest.raises(NotBounded):
        remove_constants(dual_space(vee))


def test_lattice_dual_matches_brute_morphisms(b4, b8, m3, four_chain):
    for p in (b4, b8, m3, four_chain):
        want = oracles.brute_lattice_01_morphisms(p.n, oracles.leq_fn(p))
        assert as_sets(lattice_dual(p)) == want


def test_known_lattice_dual_sizes(b4, m3):
    assert lattice_dual(b4).size == 4
    assert lattice_dual(m3).size == 2  # constants only
    assert lattice_dual(chain(3)).size == 4


def test_lattice_dual_rejects_non_lattices(vee):
    with pytest.raises(NotALattice):
        lattice_dual(vee)


def test_orthodual_points_swap_values_under_complement(b4, m4):
    for p in (b4, m4):
        for f in find_orthocomplementations(p):
            od = orthodual_space(p, f)
            assert od.size >= 1
            for s in od.points:
                for e in range(p.n):
                    assert (s >> e & 1) != (s >> f(e) & 1)


def test_orthodual_rejects_foreign_map(b4, m4):
    f = find_orthocomplementations(b4)[0]
    with pytest.raises(InvalidOrthoMap):
        orthodual_space(m4, f)


def test_orthodual_size_on_b4(b4):
    f = find_orthocomplementations(b4)[0]
    assert orthodual_space(b4, f).size == 2
