from fractions import Fraction

import numpy as np
import pytest

from conftest import load, published_table
from primhom.chartab import (
    CharacterTable,
    character_table,
    class_algebra,
    find_bijection,
    galois_defects,
    inner_product,
    linear_rows,
    orthogonality_defects,
)
from primhom.cyclotomic import Cyclotomic, E
from primhom.perm import class_labels


def brute_class_coefficients(g, classes):
    lab = class_labels(g, classes)
    r = len(classes)
    out = np.zeros((r, r, r), dtype=np.int64)
    for k, ck in enumerate(classes):
        z = ck.representative
        for x in range(g.order):
            for y in range(g.order):
                if g.mul[x, y] == z:
                    out[lab[x], lab[y], k] += 1
    return out


def test_class_algebra_matches_brute_force(small_name):
    _, g, classes, _ = load(small_name)
    assert np.array_equal(class_algebra(g, classes).coeffs, brute_class_coefficients(g, classes))


def test_class_algebra_q8_examples():
    _, g, classes, _ = load("q8")
    a = class_algebra(g, classes).coeffs
    # the central class 2 times itself gives the identity once
    assert a[1, 1, 0] == 1
    # a class of elements of order 4 squares onto {1, z}, twice each
    for j in range(2, 5):
        assert a[j, j, 0] == 2 and a[j, j, 1] == 2


def test_orthogonality_and_degrees(fixture_name):
    _, g, _, t = load(fixture_name)
    assert orthogonality_defects(t) == []
    assert sum(d * d for d in t.degrees) == g.order
    assert all(g.order % d == 0 for d in t.degrees)
    assert t.degrees[0] == 1 and all(v == 1 for v in t.values[0])


def test_inner_products(fixture_name):
    _, _, _, t = load(fixture_name)
    for i in range(t.nclasses):
        for j in range(t.nclasses):
            assert inner_product(t, t.values[i], t.values[j]) == (1 if i == j else 0)


def test_products_decompose_with_nonnegative_integer_multiplicities(small_name):
    _, _, _, t = load(small_name)
    for i in range(t.nclasses):
        for j in range(i, t.nclasses):
            prod = [a * b for a, b in zip(t.values[i], t.values[j])]
            mults = [inner_product(t, prod, t.values[k]) for k in range(t.nclasses)]
            assert all(m.is_rational() and m.rational().denominator == 1 and m.rational() >= 0
                       for m in mults)


def test_central_characters_respect_the_class_algebra(small_name):
    _, g, classes, t = load(small_name)
    a = class_algebra(g, classes).coeffs
    r = t.nclasses
    for row in t.values:
        d = row[0].rational()
        w = [row[c] * Fraction(t.class_sizes[c]) / d for c in range(r)]
        for j in range(r):
            for k in range(r):
                rhs = Cyclotomic(0)
                for m in range(r):
                    if a[j, k, m]:
                        rhs = rhs + w[m] * int(a[j, k, m])
                assert w[j] * w[k] == rhs


def test_linear_rows_are_homomorphisms(small_name):
    _, g, classes, t = load(small_name)
    lab = class_labels(g, classes)
    for i in linear_rows(t):
        chi = t.values[i]
        for x in range(g.order):
            for y in range(g.order):
                assert chi[lab[g.mul[x, y]]] == chi[lab[x]] * chi[lab[y]]


def test_galois_consistency(fixture_name):
    _, g, _, t = load(fixture_name)
    assert galois_defects(t) == []
    for i in linear_rows(t):
        for c in range(t.nclasses):
            assert t.values[i][t.power_map(c, g.prime)] == t.values[i][c] ** g.prime


def test_q8_table():
    _, _, _, t = load("q8")
    assert sorted(t.degrees) == [1, 1, 1, 1, 2]
    deg2 = t.values[t.degrees.index(2)]
    assert sorted(v.rational() for v in deg2) == [-2, 0, 0, 0, 2]
    # values live in Q(E(e)) for the exponent e
    assert t.conductor == 4
    assert all(v.is_rational() for row in t.values for v in row)


def test_q16_needs_no_irrationalities_beyond_sqrt2():
    _, _, _, t = load("q16")
    assert sorted(t.degrees) == [1, 1, 1, 1, 2, 2, 2]
    r2 = E(8) - E(8) ** 3
    vals = {v for row in t.values for v in row}
    assert r2 in vals and -r2 in vals


def test_heisenberg_table():
    _, _, _, t = load("heis27")
    assert sorted(t.degrees) == [1] * 9 + [3, 3]
    assert t.conductor == 3


def test_row_order_is_deterministic():
    _, g, classes, t = load("g128")
    again = character_table(g, classes, seed=t.seed)
    assert [[str(v) for v in row] for row in again.values] == [[str(v) for v in row] for row in t.values]


@pytest.mark.parametrize("seed", [1, 2, 99])
def test_seed_does_not_change_the_table(seed):
    _, g, classes, t = load("q16")
    other = character_table(g, classes, seed=seed)
    assert other.values == t.values


def test_g128_degrees():
    _, _, _, t = load("g128")
    assert sorted(t.degrees) == [1] * 8 + [2] * 14 + [8]


def test_published_table_is_a_valid_table():
    t = published_table()
    assert orthogonality_defects(t) == []
    assert galois_defects(t) == []
    assert t.order == 128 and t.nclasses == 23


def test_bijection_rejects_a_different_table():
    _, _, _, q8 = load("q8")
    _, _, _, d8 = load("d8")
    assert find_bijection(q8, d8) is None
    assert find_bijection(q8, q8) == (list(range(5)), list(range(5)))


def test_bijection_detects_a_corrupted_entry():
    t = published_table()
    values = [list(row) for row in t.values]
    values[12][11] = -values[12][11]
    bad = CharacterTable(t.order, t.prime, t.conductor, t.class_sizes, t.element_orders,
                         t.power_map, values)
    _, _, _, ours = load("g128")
    assert find_bijection(bad, ours) is None
