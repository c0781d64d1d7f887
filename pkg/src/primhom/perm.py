"""Finite p-groups as fully enumerated permutation groups.

Elements are indexed 0..|G|-1 with the identity at index 0.  Products are
composed left to right: ``(x * y)`` first applies ``x`` then ``y``, so a word
``a b`` acts on a point ``i`` as ``b[a[i]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ClosureExceedsCap, NotAPGroup, TrivialGroup

DEFAULT_ELEMENT_CAP = 10_000


class Permutation:
    """A bijection of {0, ..., degree-1} given by its image array."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a bijection: {list(imgs)}")
        self.images = imgs

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]], one_based: bool = False):
        imgs = list(range(degree))
        for cyc in cycles:
            cyc = [c - 1 for c in cyc] if one_based else list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a] = b
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self first, then other
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: Tuple[int, ...]
    element_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Subgroup:
    members: frozenset
    normal: bool = False

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x):
        return x in self.members


@dataclass(frozen=True)
class PowerMap:
    """Class-level power maps for every prime dividing the group exponent."""

    table: Dict[int, Tuple[int, ...]]
    element_orders: Tuple[int, ...]

    def __call__(self, c: int, k: int) -> int:
        m = self.element_orders[c]
        k %= m
        if k == 0:
            return 0
        for q, e in _factor(k).items():
            if q not in self.table:
                raise KeyError(f"no {q}-power map stored")
            for _ in range(e):
                c = self.table[q][c]
        return c

    def covers(self, k: int) -> bool:
        """True if f(c, k) is computable for every class c."""
        return all(q in self.table for q in _factor(k))


def _factor(n: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_exponent(n: int, p: int) -> Optional[int]:
    """k with n == p**k, or None."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else None


class Group:
    """A finite p-group with its complete element list and Cayley table."""

    def __init__(self, elements: List[Permutation], generators: List[Permutation], prime: int, degree: int):
        self.elements = elements
        self.generators = generators
        self.prime = prime
        self.degree = degree
        self.index = {e: i for i, e in enumerate(elements)}
        self.generator_indices = [self.index[g] for g in generators]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"<Group order={self.order} prime={self.prime} degree={self.degree}>"

    @cached_property
    def mul(self) -> np.ndarray:
        """``mul[x, y]`` is the index of x*y."""
        n, d = self.order, self.degree
        if d == 0:
            return np.zeros((1, 1), dtype=np.int32)
        imgs = np.array([e.images for e in self.elements], dtype=np.int64)
        base = _base_points(imgs)
        codes = _encode(imgs[:, base], d)
        order = np.argsort(codes)
        sorted_codes = codes[order]
        table = np.empty((n, n), dtype=np.int32)
        for x in range(n):
            # row b of prod is images of x*b = b[x[i]]
            prod = imgs[:, imgs[x, base]]
            pos = np.searchsorted(sorted_codes, _encode(prod, d))
            table[x] = order[pos]
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mul == 0)
        out = np.empty(self.order, dtype=np.int32)
        out[rows] = cols
        return out

    def multiply(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse(x), -k
        result, base = 0, x
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x y x^-1 y^-1."""
        m = self.mul
        return int(m[m[m[x, y], self.inv[x]], self.inv[y]])

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        remaining = np.ones(n, dtype=bool)
        while remaining.any():
            hit = remaining & (cur == 0)
            orders[hit] = k
            remaining &= ~hit
            cur = self.mul[cur, np.arange(n)]
            k += 1
        return orders

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders)) if self.order > 1 else 1

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def closure(self, gens: Iterable[int]) -> frozenset:
        """Subgroup generated by the given element indices."""
        gens = sorted(set(int(g) for g in gens) - {0})
        members = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.mul[x, g])
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(members)

    def is_normal(self, members: frozenset) -> bool:
        idx = np.fromiter(members, dtype=np.int64)
        mem = np.zeros(self.order, dtype=bool)
        mem[idx] = True
        for g in self.generator_indices:
            conj = self.mul[self.mul[self.inv[g], idx], g]
            if not mem[conj].all():
                return False
        return True


def _base_points(imgs: np.ndarray) -> List[int]:
    n, d = imgs.shape
    base: List[int] = []
    # refine the partition of elements by their images on base points
    keys = np.zeros(n, dtype=np.int64)
    distinct = 1
    for pt in range(d):
        if distinct == n:
            break
        trial = keys * d + imgs[:, pt]
        _, trial = np.unique(trial, return_inverse=True)
        count = int(trial.max()) + 1
        if count > distinct:
            base.append(pt)
            keys, distinct = trial.astype(np.int64), count
    return base or [0]


def _encode(rows: np.ndarray, d: int) -> np.ndarray:
    rows = np.atleast_2d(rows)
    if d ** rows.shape[1] < 2 ** 62:
        code = np.zeros(rows.shape[0], dtype=np.int64)
        for j in range(rows.shape[1]):
            code = code * d + rows[:, j]
        return code
    # fall back to bytes for very long bases
    return np.array([r.tobytes() for r in rows.astype(np.int32)])


def generate_group(generators: Sequence[Permutation], prime: int, degree: Optional[int] = None,
                   cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Enumerate the group generated by ``generators`` (breadth first, identity first)."""
    gens = list(generators)
    if degree is None:
        degree = gens[0].degree if gens else 0
    if any(g.degree != degree for g in gens):
        raise ValueError("generators act on different degrees")
    identity = Permutation.identity(degree)
    elements = [identity]
    seen = {identity}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise ClosureExceedsCap(f"group order exceeds cap {cap}")
        i += 1
    if prime_power_exponent(len(elements), prime) is None:
        raise NotAPGroup(f"order {len(elements)} is not a power of {prime}")
    return Group(elements, gens, prime, degree)


def conjugacy_classes(g: Group) -> List[ConjugacyClass]:
    """Orbits under conjugation, identity first, then by (order, size, min member)."""
    n = g.order
    label = np.full(n, -1, dtype=np.int64)
    orbits = []
    gens = g.generator_indices
    for x in range(n):
        if label[x] >= 0:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for s in gens:
                    z = int(g.mul[g.mul[g.inv[s], y], s])
                    if z not in orbit:
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        members = tuple(sorted(orbit))
        label[list(members)] = len(orbits)
        orbits.append(members)
    orders = g.element_orders
    classes = [ConjugacyClass(m[0], m, int(orders[m[0]])) for m in orbits]
    classes.sort(key=lambda c: (c.representative != 0, c.element_order, c.size, c.members[0]))
    return classes


def class_labels(g: Group, classes: Sequence[ConjugacyClass]) -> np.ndarray:
    """Array mapping element index -> class index."""
    lab = np.empty(g.order, dtype=np.int64)
    for i, c in enumerate(classes):
        lab[list(c.members)] = i
    return lab


def power_map(g: Group, classes: Sequence[ConjugacyClass]) -> PowerMap:
    lab = class_labels(g, classes)
    table = {}
    # every prime below the exponent, so f(c, k) is defined for all k
    for q in [q for q in range(2, g.exponent + 1) if _factor(q) == {q: 1}]:
        table[q] = tuple(int(lab[g.power(c.representative, q)]) for c in classes)
    return PowerMap(table, tuple(c.element_order for c in classes))


def _all_commutators(g: Group, left: Iterable[int], right: Iterable[int]) -> np.ndarray:
    x = np.fromiter(left, dtype=np.int64)[:, None]
    y = np.fromiter(right, dtype=np.int64)[None, :]
    m = g.mul
    return np.unique(m[m[m[x, y], g.inv[x]], g.inv[y]])


def derived_subgroup(g: Group) -> Subgroup:
    comms = _all_commutators(g, range(g.order), range(g.order))
    return Subgroup(g.closure(comms.tolist()), normal=True)


def frattini_subgroup(g: Group) -> Subgroup:
    """Phi(G) = [G,G] G^p for a p-group."""
    comms = _all_commutators(g, range(g.order), range(g.order)).tolist()
    powers = {g.power(x, g.prime) for x in range(g.order)}
    return Subgroup(g.closure(set(comms) | powers), normal=True)


def rank(g: Group) -> int:
    if g.order == 1:
        raise TrivialGroup("rank is undefined for the trivial group")
    phi = frattini_subgroup(g)
    k = prime_power_exponent(g.order // phi.order, g.prime)
    assert k is not None
    return k


def primitive_classes_oracle(g: Group, classes: Sequence[ConjugacyClass]) -> set:
    """Classes lying outside the Frattini subgroup."""
    phi = frattini_subgroup(g).members
    out = set()
    for i, c in enumerate(classes):
        inside = [m in phi for m in c.members]
        if any(inside) != all(inside):
            raise AssertionError(f"class {i} is split by the Frattini subgroup")
        if not inside[0]:
            out.add(i)
    return out


def lower_central_series(g: Group) -> List[Subgroup]:
    series = [Subgroup(frozenset(range(g.order)), normal=True)]
    while series[-1].order > 1:
        comms = _all_commutators(g, series[-1].members, range(g.order))
        nxt = Subgroup(g.closure(comms.tolist()), normal=True)
        if nxt.order == series[-1].order:
            raise NotAPGroup("lower central series stalls; group is not nilpotent")
        series.append(nxt)
    return series


def nilpotency_class(g: Group) -> int:
    return len(lower_central_series(g)) - 1


def abelian_invariants(g: Group, members: Iterable[int]) -> Tuple[int, ...]:
    """Invariant factors (prime powers, ascending) of an abelian p-subgroup."""
    mem = sorted(members)
    p = g.prime
    for x in mem:
        for y in mem:
            if g.mul[x, y] != g.mul[y, x]:
                raise ValueError("subgroup is not abelian")
    orders = [int(g.element_orders[x]) for x in mem]
    # omega[k] = #{x : x^(p^k) = 1}
    omega = []
    k = 0
    while True:
        cnt = sum(1 for o in orders if (p ** k) % o == 0)
        omega.append(cnt)
        if cnt == len(mem):
            break
        k += 1
    ranks = [prime_power_exponent(omega[i] // omega[i - 1], p) for i in range(1, len(omega))]
    # ranks[k-1] = number of cyclic factors of order >= p^k
    factors = []
    for k in range(len(ranks), 0, -1):
        ge_k = ranks[k - 1]
        ge_next = ranks[k] if k < len(ranks) else 0
        factors += [p ** k] * (ge_k - ge_next)
    return tuple(sorted(factors))


def minimal_generating_set(g: Group) -> List[int]:
    """A generating set of size rank(g), preferring the given generators."""
    phi = frattini_subgroup(g).members
    chosen: List[int] = []
    span = g.closure(phi)
    for x in list(g.generator_indices) + list(range(g.order)):
        if x not in span:
            chosen.append(x)
            span = g.closure(set(phi) | set(chosen))
            if len(span) == g.order:
                break
    return chosen
