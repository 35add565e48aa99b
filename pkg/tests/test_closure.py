import itertools

import pytest

from cyclicgr.autsearch import automorphism_group, is_automorphism
from cyclicgr.cgraph import all_pairs, pair_index
from cyclicgr.closure import (
    NOT_IN_GR,
    EnumerationBudgetError,
    coloring_graph,
    edge_orbits,
    gr_k_membership,
    min_colors,
    partitions_up_to,
    rainbow_graph,
    two_star_closure,
    _rgs_iter,
)
from cyclicgr.constructions import build_two_orbit_3colored
from cyclicgr.permgroup import (
    CyclicSpec,
    Permutation,
    contains,
    cyclic_group,
    dihedral_group,
    group_equals,
)


def orbits_by_full_element_action(group):
    """Independent edge-orbit oracle: union-find over every element's action."""
    n = group.degree
    pairs = all_pairs(n)
    parent = list(range(len(pairs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in group.elements():
        for i, (u, v) in enumerate(pairs):
            a, b = t[u], t[v]
            if a > b:
                a, b = b, a
            j = pair_index(a, b, n)
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[rj] = ri
    return len({find(i) for i in range(len(pairs))})


def test_edge_orbit_counts():
    c3 = cyclic_group(CyclicSpec(p=3, exponents=(1,)))
    assert edge_orbits(c3).count == 1

    c3_2 = cyclic_group(CyclicSpec(p=3, exponents=(1, 1)))
    part = edge_orbits(c3_2)
    assert part.count == 5
    assert part.count == orbits_by_full_element_action(c3_2)
    # mixed pairs split into 3 orbits, one per shift residue
    mixed = {part.orbit_id(u, v) for u in range(3) for v in range(3, 6)}
    assert len(mixed) == 3

    c5_2 = cyclic_group(CyclicSpec(p=5, exponents=(1, 1)))
    assert edge_orbits(c5_2).count == 9
    assert orbits_by_full_element_action(c5_2) == 9


def test_edge_orbit_invariance_and_representatives():
    grp = cyclic_group(CyclicSpec(p=2, exponents=(2, 1)))
    part = edge_orbits(grp)
    for g in grp.element_perms():
        for (u, v) in all_pairs(grp.degree):
            a, b = g.apply_pair(u, v)
            assert part.orbit_id(u, v) == part.orbit_id(a, b)
    # ids contiguous, assigned by smallest representative
    assert sorted(set(part.orbit_of_pair)) == list(range(part.count))
    reps = [pair_index(u, v, grp.degree) for (u, v) in part.representatives]
    assert reps == sorted(reps)


def test_closure_single_orbit_gains_reflection():
    # single-orbit cyclic actions close up to at least the dihedral group
    for p, n in [(3, 3), (2, 4), (5, 5), (7, 7), (2, 8), (3, 9)]:
        cn = cyclic_group(CyclicSpec.from_orbit_sizes(p, [n]))
        closure = two_star_closure(cn)
        refl = Permutation([(-i) % n for i in range(n)])
        assert contains(closure, refl)
        assert closure.order >= 2 * n


def test_closure_examples():
    c3 = cyclic_group(CyclicSpec(p=3, exponents=(1,)))
    assert group_equals(two_star_closure(c3), dihedral_group(3))

    s2 = cyclic_group(CyclicSpec(p=2, exponents=(1,)))
    assert group_equals(two_star_closure(s2), s2)

    c7_2 = cyclic_group(CyclicSpec(p=7, exponents=(1, 1)))
    assert two_star_closure(c7_2).order == 7


def test_closure_is_idempotent_and_contains_group():
    for spec in [
        CyclicSpec(p=3, exponents=(1,)),
        CyclicSpec(p=2, exponents=(2,), trivial_count=1),
        CyclicSpec(p=2, exponents=(1, 1)),
        CyclicSpec(p=3, exponents=(1, 1)),
    ]:
        grp = cyclic_group(spec)
        cl = two_star_closure(grp)
        assert grp.elements() <= cl.elements()
        again = two_star_closure(cl)
        assert group_equals(again, cl)


def test_closure_elements_preserve_every_invariant_coloring():
    grp = cyclic_group(CyclicSpec(p=2, exponents=(2, 1)))
    part = edge_orbits(grp)
    cl = two_star_closure(grp)
    for coloring in itertools.product(range(2), repeat=part.count):
        graph = coloring_graph(part, coloring)
        for t in cl.elements():
            assert is_automorphism(graph, Permutation(t))


def test_rgs_enumeration_matches_partition_count():
    for m in range(7):
        for k in range(1, 5):
            seen = list(_rgs_iter(m, k))
            assert len(seen) == partitions_up_to(m, k)
            assert len(set(seen)) == len(seen)


def test_membership_small_cases():
    a = cyclic_group(CyclicSpec(p=3, exponents=(1, 1)))
    r2 = gr_k_membership(a, 2)
    assert not r2.member and r2.exhaustive
    assert r2.extra_automorphism is not None
    extra = r2.extra_automorphism
    assert extra.images not in a.elements()
    part = edge_orbits(a)
    rep = coloring_graph(
        part, tuple(r2.extra_for_coloring[i] for i in range(part.count))
    )
    assert is_automorphism(rep, extra)

    r3 = gr_k_membership(a, 3)
    assert r3.member
    witness = coloring_graph(part, tuple(r3.witness_coloring[i] for i in range(part.count)))
    assert group_equals(automorphism_group(witness), a)


def test_figure_one_coloring_is_a_witness():
    a = cyclic_group(CyclicSpec(p=3, exponents=(1, 1)))
    g = build_two_orbit_3colored(3)
    assert group_equals(automorphism_group(g), a)
    part = edge_orbits(a)
    # the figure's coloring is constant on the edge orbits
    colors_by_orbit = {}
    for (u, v) in all_pairs(6):
        oid = part.orbit_id(u, v)
        c = g.color(u, v)
        assert colors_by_orbit.setdefault(oid, c) == c


def test_membership_c4_squared():
    a = cyclic_group(CyclicSpec(p=2, exponents=(1, 1), trivial_count=0))
    # (2,2) is the order-two group; use C_4 parallel instead
    a = cyclic_group(CyclicSpec.from_orbit_sizes(2, [4, 4]))
    r = gr_k_membership(a, 2)
    assert not r.member and r.exhaustive


def test_min_colors_examples():
    assert min_colors(cyclic_group(CyclicSpec(p=3, exponents=(1, 1))), 3) == 3
    assert min_colors(cyclic_group(CyclicSpec(p=5, exponents=(1,))), 3) is NOT_IN_GR
    assert min_colors(cyclic_group(CyclicSpec(p=7, exponents=(1, 1))), 3) == 2


def test_membership_hierarchy_is_monotone():
    for spec in [CyclicSpec(p=3, exponents=(1, 1)), CyclicSpec(p=2, exponents=(1, 1))]:
        grp = cyclic_group(spec)
        prev = False
        for k in (1, 2, 3, 4):
            member = gr_k_membership(grp, k).member
            assert member or not prev
            prev = prev or member


def test_budget_exceeded_is_loud():
    grp = cyclic_group(CyclicSpec(p=2, exponents=(1, 1, 1, 1, 1)))
    with pytest.raises(EnumerationBudgetError):
        gr_k_membership(grp, 2, budget=10, samples=5)


def test_sampling_finds_witness_beyond_budget():
    grp = cyclic_group(CyclicSpec(p=2, exponents=(1, 1, 1, 1, 1)))
    r = gr_k_membership(grp, 2, budget=10, samples=50_000)
    assert r.member and not r.exhaustive
    part = edge_orbits(grp)
    witness = coloring_graph(part, tuple(r.witness_coloring[i] for i in range(part.count)))
    assert automorphism_group(witness).order == grp.order


def test_direct_sum_facts_at_desk_scale():
    # a sum is representable iff both parts are, except the 2-point identity
    from cyclicgr.permgroup import PermGroup, direct_sum

    c3 = cyclic_group(CyclicSpec(p=3, exponents=(1,)))
    s2 = cyclic_group(CyclicSpec(p=2, exponents=(1,)))
    i1 = PermGroup(1, [])
    i2 = direct_sum(i1, i1)

    bad = direct_sum(c3, s2)  # one summand unrepresentable
    assert two_star_closure(bad).order > bad.order

    assert two_star_closure(i2).order > i2.order  # the identity-pair exception

    good = direct_sum(s2, s2)
    assert two_star_closure(good).order == good.order

    # distinct representable summands: the sum stays two-colorable
    d3 = dihedral_group(3)
    mix = direct_sum(d3, s2)
    assert two_star_closure(mix).order == mix.order
    assert min_colors(mix, 3) == 2
