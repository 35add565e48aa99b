import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicgr.autsearch import (
    automorphism_group,
    automorphism_group_bruteforce,
    is_automorphism,
    stabilizer_is_trivial,
)
from cyclicgr.cgraph import ColoredGraph, GraphBuilder
from cyclicgr.constructions import (
    build_mixed_two_power,
    build_many_orbit_2colored,
    build_prime_power_generic,
    build_two_orbit_3colored,
)
from cyclicgr.permgroup import (
    CyclicSpec,
    Permutation,
    contains,
    cyclic_group,
    group_equals,
)


def random_graph(rng, n, k):
    m = n * (n - 1) // 2
    return ColoredGraph(n, k, tuple(rng.randrange(k) for _ in range(m)))


def relabel(graph, pi):
    b = GraphBuilder(graph.n, graph.k)
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            b.set_color(pi(u), pi(v), graph.color(u, v))
    return b.build()


def test_is_automorphism_figure_one():
    g = build_two_orbit_3colored(3)
    grp = cyclic_group(CyclicSpec(p=3, exponents=(1, 1)))
    assert is_automorphism(g, grp.generators[0])
    sigma = Permutation.from_cycles(6, [(1, 2), (4, 5)])
    assert not is_automorphism(g, sigma)
    assert is_automorphism(g, Permutation.identity(6))
    with pytest.raises(ValueError):
        is_automorphism(g, Permutation.identity(5))


def test_bruteforce_monochromatic_k5():
    g = ColoredGraph(5, 1, tuple([0] * 10))
    assert automorphism_group_bruteforce(g).order == 120


def test_bruteforce_two_colored_five_cycle():
    b = GraphBuilder(5, 2)
    for i in range(5):
        b.set_color(i, (i + 1) % 5, 1)
    aut = automorphism_group_bruteforce(b.build())
    assert aut.order == 10


def test_bruteforce_figure_one():
    g = build_two_orbit_3colored(3)
    aut = automorphism_group_bruteforce(g)
    assert aut.order == 3
    assert group_equals(aut, cyclic_group(CyclicSpec(p=3, exponents=(1, 1))))


def test_bruteforce_cap():
    g = ColoredGraph(9, 1, tuple([0] * 36))
    with pytest.raises(ValueError):
        automorphism_group_bruteforce(g)


def test_engine_matches_bruteforce_on_seeded_random_graphs():
    rng = random.Random(152)
    for _ in range(60):
        n = rng.randrange(2, 8)
        k = rng.randrange(1, 5)
        g = random_graph(rng, n, k)
        fast = automorphism_group(g)
        slow = automorphism_group_bruteforce(g)
        assert fast.order == slow.order
        assert fast.elements() == slow.elements()


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_engine_is_a_group_and_conjugates_under_relabeling(data):
    n = data.draw(st.integers(min_value=2, max_value=6))
    k = data.draw(st.integers(min_value=1, max_value=3))
    m = n * (n - 1) // 2
    colors = data.draw(st.lists(st.integers(0, k - 1), min_size=m, max_size=m))
    g = ColoredGraph(n, k, tuple(colors))
    aut = automorphism_group(g)
    elems = aut.elements()
    assert tuple(range(n)) in elems
    for t in list(elems)[:8]:
        assert Permutation(t).inverse().images in elems
    pi = Permutation(data.draw(st.permutations(list(range(n)))))
    conj = automorphism_group(relabel(g, pi))
    expected = {(pi * Permutation(t) * pi.inverse()).images for t in elems}
    assert conj.elements() == frozenset(expected)


def test_generic_construction_seven_seven():
    spec = CyclicSpec(p=7, exponents=(1, 1))
    g = build_prime_power_generic(spec)
    aut = automorphism_group(g)
    grp = cyclic_group(spec)
    assert aut.order == 7
    assert contains(aut, grp.generators[0])
    assert stabilizer_is_trivial(g, 0, aut)


def test_engine_figure_three():
    spec = CyclicSpec.from_orbit_sizes(2, [4, 4, 2])
    g = build_mixed_two_power(spec)
    aut = automorphism_group(g)
    assert aut.order == 4
    assert group_equals(aut, cyclic_group(spec))


def test_stabilizer_examples():
    g1 = build_two_orbit_3colored(3)
    aut1 = automorphism_group(g1)
    assert stabilizer_is_trivial(g1, 0, aut1)
    mono = ColoredGraph(3, 1, (0, 0, 0))
    assert not stabilizer_is_trivial(mono, 0, automorphism_group(mono))
    g2 = build_many_orbit_2colored(3, 3)
    assert stabilizer_is_trivial(g2, 0, automorphism_group(g2))


def test_generator_containment_holds_at_scale():
    # cheap generator check on graphs too big for a full search in a unit test
    for p, sizes in [(3, [27, 3]), (2, [16, 4, 2, 2]), (7, [49, 7])]:
        spec = CyclicSpec.from_orbit_sizes(p, sizes)
        if sizes == [27, 3]:
            from cyclicgr.constructions import build_two_nontrivial_3colored

            g = build_two_nontrivial_3colored(spec)
        elif sizes == [16, 4, 2, 2]:
            g = build_mixed_two_power(spec)
        else:
            g = build_prime_power_generic(spec)
        for gen in cyclic_group(spec).generators:
            assert is_automorphism(g, gen)
