import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicgr.permgroup import (
    CyclicSpec,
    MaterializationLimitError,
    PermGroup,
    Permutation,
    contains,
    cyclic_group,
    dihedral_group,
    direct_sum,
    group_equals,
    parallel_product,
)

perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(list(range(n))).map(Permutation)
)


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_compose_and_inverse():
    a = Permutation.from_cycles(3, [(0, 1, 2)])
    b = Permutation.from_cycles(3, [(0, 1)])
    assert (a * b).images == (2, 1, 0)
    assert (a * a.inverse()).is_identity


@given(perms)
def test_inverse_is_involutive(g):
    assert g.inverse().inverse() == g
    assert (g * g.inverse()).is_identity


@given(st.integers(min_value=2, max_value=6), st.data())
def test_composition_stays_in_group(n, data):
    g = data.draw(st.permutations(list(range(n))).map(Permutation))
    h = data.draw(st.permutations(list(range(n))).map(Permutation))
    grp = PermGroup(n, [g, h])
    elems = grp.elements()
    assert tuple(range(n)) in elems
    for t in elems:
        assert Permutation(t).inverse().images in elems
    assert (g * h).images in elems


def test_cycle_string_round_trip():
    g = Permutation.from_cycles(6, [(0, 1, 2), (4, 5)])
    assert g.cycle_string() == "(0 1 2)(4 5)"
    assert Permutation.identity(4).cycle_string() == "()"


def test_cyclic_spec_validation():
    with pytest.raises(ValueError):
        CyclicSpec(p=4, exponents=(1,))
    with pytest.raises(ValueError):
        CyclicSpec(p=3, exponents=(0,))
    with pytest.raises(ValueError):
        CyclicSpec.from_orbit_sizes(3, [6])
    spec = CyclicSpec.from_orbit_sizes(5, [5, 25])
    assert spec.exponents == (2, 1)
    assert spec.orbit_sizes == (25, 5)
    assert spec.order == 25


def test_cyclic_group_parallel_action():
    spec = CyclicSpec(p=3, exponents=(1, 1))
    grp = cyclic_group(spec)
    assert grp.degree == 6
    assert grp.order == 3
    gen = grp.generators[0]
    assert gen.cycle_string() == "(0 1 2)(3 4 5)"


def test_cyclic_group_two_points():
    grp = cyclic_group(CyclicSpec(p=2, exponents=(1,)))
    assert grp.degree == 2 and grp.order == 2
    assert group_equals(grp, PermGroup(2, [Permutation([1, 0])]))


def test_cyclic_group_mixed_orbits():
    grp = cyclic_group(CyclicSpec(p=5, exponents=(2, 1)))
    assert grp.degree == 30
    assert grp.order == 25
    assert len(grp.elements()) == 25


def test_cyclic_group_orbit_layout_matches():
    spec = CyclicSpec(p=3, exponents=(2, 1), trivial_count=2)
    grp = cyclic_group(spec)
    layout = spec.layout()
    assert [set(range(b, b + s)) for b, s in layout.entries] == [
        set(o) for o in grp.orbits()[:2]
    ]
    assert layout.trivial_base == 12
    assert layout.label(0) == "v^1_0"
    assert layout.label(12) == "f_0"


def test_cyclic_group_element_cycle_structure():
    spec = CyclicSpec(p=3, exponents=(2, 1))
    grp = cyclic_group(spec)
    for t in grp.elements():
        g = Permutation(t)
        for cyc in g.cycles():
            assert len(cyc) in (3, 9)
            # a cycle stays within one orbit
            assert max(cyc) < 9 or min(cyc) >= 9


def test_dihedral():
    assert dihedral_group(3).order == 6
    assert dihedral_group(5).order == 10
    d4 = dihedral_group(4)
    rot = Permutation.from_cycles(4, [(0, 1, 2, 3)])
    refl = Permutation.from_cycles(4, [(1, 3)])
    assert contains(d4, rot) and contains(d4, refl)
    with pytest.raises(ValueError):
        dihedral_group(2)


def test_direct_sum_identities():
    i1 = PermGroup(1, [])
    i2 = direct_sum(i1, i1)
    assert i2.degree == 2 and i2.order == 1


def test_direct_sum_orders():
    c3 = cyclic_group(CyclicSpec(p=3, exponents=(1,)))
    s = direct_sum(c3, c3)
    assert s.degree == 6 and s.order == 9
    s2 = direct_sum(cyclic_group(CyclicSpec(p=2, exponents=(1,))), PermGroup(1, []))
    assert s2.degree == 3 and s2.order == 2


def test_parallel_product():
    c3 = cyclic_group(CyclicSpec(p=3, exponents=(1,)))
    p = parallel_product(c3, 2)
    assert p.degree == 6 and p.order == 3
    assert group_equals(p, cyclic_group(CyclicSpec(p=3, exponents=(1, 1))))
    assert group_equals(parallel_product(c3, 1), c3)
    c5 = cyclic_group(CyclicSpec(p=5, exponents=(1,)))
    assert parallel_product(c5, 2).order == 5


def test_reflection_not_in_parallel_cyclic():
    grp = cyclic_group(CyclicSpec(p=3, exponents=(1, 1)))
    refl = Permutation.from_cycles(6, [(1, 2), (4, 5)])
    assert not contains(grp, refl)
    d3d3 = direct_sum(dihedral_group(3), dihedral_group(3))
    assert contains(d3d3, refl)


def test_group_equals_rejects_degree_mismatch():
    a = cyclic_group(CyclicSpec(p=3, exponents=(1,)))
    b = cyclic_group(CyclicSpec(p=3, exponents=(1, 1)))
    with pytest.raises(ValueError):
        group_equals(a, b)
    assert not group_equals(a, dihedral_group(3))


def test_materialization_cap():
    big = PermGroup(12, [Permutation([(i + 1) % 12 for i in range(12)])], order=12)
    with pytest.raises(MaterializationLimitError):
        big.elements(cap=5)


def test_parallel_and_sum_preserve_group_axioms():
    c3 = cyclic_group(CyclicSpec(p=3, exponents=(1,)))
    for grp in (parallel_product(c3, 3), direct_sum(c3, dihedral_group(4))):
        elems = grp.elements()
        assert len(elems) == grp.order
        ident = tuple(range(grp.degree))
        assert ident in elems
        some = [Permutation(t) for t in sorted(elems)[:6]]
        for g in some:
            assert g.inverse().images in elems
            for h in some:
                assert (g * h).images in elems
