"""Deciding Property II from a character table and its power map.

Everything here reads only class-level data: a class is primitive when some
linear character attains its largest root-of-unity order there with a value
other than 1, and an irreducible character is imprimitive when the sum of its
values over every primitive cyclic subgroup vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Set

from .chartab import CharacterTable, linear_rows, orthogonality_defects
from .cyclotomic import NOT_A_ROOT, Cyclotomic
from .errors import InconsistencyDetected, MalformedTable, TrivialGroup
from .perm import ConjugacyClass, Group, class_labels, primitive_classes_oracle, prime_power_exponent, rank


@dataclass
class PropertyIIReport:
    order: int
    prime: int
    rank: int
    degrees: List[int]
    primitive_classes: List[int]
    restriction_sums: List[List[Cyclotomic]]
    imprimitive_irreps: List[int]
    provenance: str = "group"

    @property
    def has_property_ii(self) -> bool:
        # the property is only defined for rank >= 2; a cyclic group's nontrivial
        # characters are all imprimitive, but with one petal H_1 is just C
        return self.rank >= 2 and bool(self.imprimitive_irreps)

    @property
    def in_scope(self) -> bool:
        return self.rank >= 2

    @property
    def nclasses(self) -> int:
        return len(self.degrees)


def check_p_group_table(t: CharacterTable, strict: bool = True):
    """Refuse tables that are not the table of a p-group."""
    if strict:
        problems = orthogonality_defects(t)
        if problems:
            raise MalformedTable("; ".join(problems[:5]))
    order = sum(d * d for d in t.degrees)
    if order != t.order or prime_power_exponent(order, t.prime) is None:
        raise MalformedTable(f"group order {order} is not a power of {t.prime}")
    for o in t.element_orders:
        if prime_power_exponent(o, t.prime) is None:
            raise MalformedTable(f"element order {o} is not a power of {t.prime}")
    for d in t.degrees:
        if prime_power_exponent(d, t.prime) is None:
            raise MalformedTable(f"degree {d} is not a power of {t.prime}")


def primitive_classes_from_table(t: CharacterTable, validate: bool = True) -> Set[int]:
    if validate:
        check_p_group_table(t)
    out: Set[int] = set()
    for i in linear_rows(t):
        row = t.values[i]
        orders = []
        for v in row:
            o = v.root_order()
            if o is NOT_A_ROOT:
                raise MalformedTable(f"linear character X.{i + 1} takes a value that is not a root of unity")
            orders.append(o)
        top = max(orders)
        out |= {c for c, v in enumerate(row) if v != 1 and orders[c] == top}
    return out


def value_at_power(t: CharacterTable, r: int, c: int, i: int) -> Cyclotomic:
    """chi_r(g^i) for g in class c, using only the p-power map.

    Write i = p^a * u with u prime to p; then chi(g^i) is the image of
    chi(g^(p^a)) under the Galois automorphism E(n) -> E(n)^u.
    """
    p = t.prime
    m = t.element_orders[c]
    i %= m
    if i == 0:
        return t.values[r][0]
    d = c
    while i % p == 0:
        d = t.power_map.table[p][d]
        i //= p
    v = t.values[r][d]
    return v if i == 1 else v.galois(i)


def restriction_sum(t: CharacterTable, r: int, c: int) -> Cyclotomic:
    """Sum of chi_r(g^i) for i = 1..ord(g), g in class c."""
    m = t.element_orders[c]
    acc = Cyclotomic(0)
    for i in range(1, m + 1):
        acc = acc + value_at_power(t, r, c, i)
    return acc


def rank_from_table(t: CharacterTable, primitive: Set[int]) -> int:
    phi = sum(s for c, s in enumerate(t.class_sizes) if c not in primitive)
    k = prime_power_exponent(t.order // phi, t.prime) if t.order % phi == 0 else None
    if k is None:
        raise MalformedTable("non-primitive classes do not form a subgroup of p-power index")
    return k


def decide_property_ii(t: CharacterTable, provenance: str = "group", validate: bool = True) -> PropertyIIReport:
    """Run the table-driven decision; every restriction sum is kept."""
    if t.order == 1:
        raise TrivialGroup("the trivial group has no rank")
    prim = sorted(primitive_classes_from_table(t, validate=validate))
    sums = [[restriction_sum(t, r, c) for c in prim] for r in range(t.nclasses)]
    imprim = [r for r, row in enumerate(sums) if all(v == 0 for v in row)]
    for r, row in enumerate(sums):
        for c, v in zip(prim, row):
            if not v.is_rational() or v.rational() % t.element_orders[c] or v.rational() < 0:
                raise MalformedTable(f"restriction sum of X.{r + 1} on class {c + 1} is {v}, "
                                     "not a nonnegative multiple of the element order")
    return PropertyIIReport(
        order=t.order,
        prime=t.prime,
        rank=rank_from_table(t, set(prim)),
        degrees=t.degrees,
        primitive_classes=prim,
        restriction_sums=sums,
        imprimitive_irreps=imprim,
        provenance=provenance,
    )


def cross_validate(g: Group, classes: Sequence[ConjugacyClass], t: CharacterTable,
                   report: Optional[PropertyIIReport] = None) -> PropertyIIReport:
    """Check the table-only decision against direct group computations."""
    if g.order == 1:
        if t.order != 1:
            raise InconsistencyDetected("trivial group with nontrivial table")
        return report
    from_table = primitive_classes_from_table(t)
    oracle = primitive_classes_oracle(g, classes)
    if from_table != oracle:
        bad = sorted(from_table ^ oracle)
        raise InconsistencyDetected(f"primitive classes differ on {[c + 1 for c in bad]}", cls=bad[0])
    if report is None:
        report = decide_property_ii(t)
    if report.rank != rank(g):
        raise InconsistencyDetected(f"table rank {report.rank} differs from group rank {rank(g)}")
    lab = class_labels(g, classes)
    for j, c in enumerate(report.primitive_classes):
        x = classes[c].representative
        # walk the cyclic subgroup element by element, no power map involved
        cyc = []
        y = x
        while True:
            cyc.append(int(lab[y]))
            if y == 0:
                break
            y = g.multiply(y, x)
        for r in range(t.nclasses):
            direct = Cyclotomic(0)
            for k in cyc:
                direct = direct + t.values[r][k]
            mult = direct * Fraction(1, len(cyc))
            if report.restriction_sums[r][j] != direct:
                raise InconsistencyDetected(
                    f"restriction sum of X.{r + 1} on class {c + 1} is {report.restriction_sums[r][j]}, "
                    f"direct walk gives {direct}", row=r, cls=c)
            if not mult.is_rational() or mult.rational().denominator != 1 or mult.rational() < 0:
                raise InconsistencyDetected(f"trivial multiplicity {mult} is not a nonnegative integer",
                                            row=r, cls=c)
    return report
