import pytest

import oracles
from conftest import ABELIAN_RANK_GE_2, load
from primhom.errors import ClosureExceedsCap, NotAPGroup, TrivialGroup
from primhom.perm import (
    Permutation,
    abelian_invariants,
    class_labels,
    conjugacy_classes,
    derived_subgroup,
    frattini_subgroup,
    generate_group,
    lower_central_series,
    minimal_generating_set,
    nilpotency_class,
    power_map,
    primitive_classes_oracle,
    rank,
)


def q8():
    i = Permutation.from_cycles(8, [(1, 2, 4, 7), (3, 6, 8, 5)], one_based=True)
    j = Permutation.from_cycles(8, [(1, 3, 4, 8), (2, 5, 7, 6)], one_based=True)
    return generate_group([i, j], prime=2)


def test_composition_is_left_to_right():
    x = Permutation([1, 2, 0])
    y = Permutation([0, 2, 1])
    # x then y: 0 -> 1 -> 2
    assert (x * y).images[0] == 2
    assert (x * x.inverse()) == Permutation.identity(3)


def test_q8_basics():
    g = q8()
    assert g.order == 8
    classes = conjugacy_classes(g)
    assert sorted(c.size for c in classes) == [1, 1, 2, 2, 2]
    assert derived_subgroup(g).order == 2
    assert frattini_subgroup(g).order == 2
    assert rank(g) == 2
    assert nilpotency_class(g) == 2


def test_class_equation(fixture_name):
    _, g, classes, _ = load(fixture_name)
    assert sum(c.size for c in classes) == g.order
    assert classes[0].members == (0,) or set(classes[0].members) == {0}
    assert all(g.order % c.size == 0 for c in classes)
    labels = class_labels(g, classes)
    for i, c in enumerate(classes):
        assert all(labels[x] == i for x in c.members)


def test_classes_match_brute_force(small_name):
    _, g, classes, _ = load(small_name)
    assert {frozenset(c.members) for c in classes} == oracles.conjugacy_partition(g)


def test_power_map_composition(fixture_name):
    _, g, classes, _ = load(fixture_name)
    pm = power_map(g, classes)
    labels = class_labels(g, classes)
    for c, cl in enumerate(classes):
        x = cl.representative
        for k in range(1, 2 * g.exponent + 1):
            assert pm(c, k) == labels[g.power(x, k)], (c, k)
        # f(f(c, a), b) == f(c, a*b)
        for a in range(1, 5):
            for b in range(1, 5):
                assert pm(pm(c, a), b) == pm(c, a * b)


def test_frattini_matches_maximal_subgroups(small_name):
    _, g, _, _ = load(small_name)
    assert set(frattini_subgroup(g).members) == oracles.frattini(g)


def test_rank_matches_exhaustive_search(small_name):
    _, g, _, _ = load(small_name)
    assert rank(g) == oracles.rank(g)
    assert len(minimal_generating_set(g)) == rank(g)
    assert oracles.closure(g, minimal_generating_set(g)) == frozenset(range(g.order))


def test_primitive_elements_are_the_frattini_complement(small_name):
    _, g, classes, _ = load(small_name)
    prim = oracles.primitive_elements(g)
    assert prim == set(range(g.order)) - set(frattini_subgroup(g).members)
    expected = {i for i, c in enumerate(classes) if set(c.members) <= prim}
    assert primitive_classes_oracle(g, classes) == expected


def test_abelian_invariants():
    _, g, _, _ = load("z4xz2")
    assert abelian_invariants(g, range(g.order)) == (2, 4)
    _, g, _, _ = load("z3xz3")
    assert abelian_invariants(g, range(g.order)) == (3, 3)
    for name in ABELIAN_RANK_GE_2:
        assert load(name)[1].is_abelian()


def test_g128_structure():
    _, g, classes, _ = load("g128")
    assert g.order == 128
    assert rank(g) == 3
    assert nilpotency_class(g) == 3
    assert len(classes) == 23
    phi = frattini_subgroup(g)
    assert phi.order == 16
    assert abelian_invariants(g, phi.members) == (2, 2, 4)
    # the derived subgroup has order 16, matching the eight linear characters
    # of the published table
    comms = {int(g.mul[g.mul[g.mul[x, y], g.inv[x]], g.inv[y]]) for x in range(g.order) for y in range(g.order)}
    assert len(oracles.closure(g, comms)) == 16
    assert set(derived_subgroup(g).members) == oracles.closure(g, comms)
    assert [h.order for h in lower_central_series(g)] == [128, 16, 2, 1]


def test_errors():
    with pytest.raises(NotAPGroup):
        generate_group([Permutation([1, 2, 0]), Permutation([1, 0, 2])], prime=3)
    with pytest.raises(ClosureExceedsCap):
        generate_group([Permutation.from_cycles(16, [range(16)])], prime=2, cap=8)
    triv = generate_group([Permutation.identity(3)], prime=2)
    assert triv.order == 1
    with pytest.raises(TrivialGroup):
        rank(triv)
