"""Brute-force oracles that only use the multiplication table of a group.

None of these share code paths with the library beyond ``Group.mul``.
"""

from __future__ import annotations

import itertools
from typing import FrozenSet, List, Set

import numpy as np


def closure(g, gens) -> FrozenSet[int]:
    seen = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(g.mul[x, s])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def all_subgroups(g) -> Set[FrozenSet[int]]:
    """Every subgroup, by closing under one extra element at a time."""
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for h in frontier:
            for x in range(g.order):
                if x in h:
                    continue
                k = closure(g, set(h) | {x})
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        frontier = nxt
    return found


def maximal_subgroups(g) -> List[FrozenSet[int]]:
    subs = [h for h in all_subgroups(g) if len(h) < g.order]
    return [h for h in subs if not any(h < k for k in subs)]


def frattini(g) -> FrozenSet[int]:
    maxes = maximal_subgroups(g)
    if not maxes:
        return frozenset([0])
    return frozenset.intersection(*maxes)


def rank(g) -> int:
    """Smallest k such that some k elements generate the group."""
    everything = frozenset(range(g.order))
    for k in itertools.count(0):
        for gens in itertools.combinations(range(g.order), k):
            if closure(g, gens) == everything:
                return k


def primitive_elements(g) -> Set[int]:
    """Elements that occur in some generating tuple of minimal length."""
    n = rank(g)
    everything = frozenset(range(g.order))
    out = set()
    for gens in itertools.combinations(range(1, g.order), n):
        if closure(g, gens) == everything:
            out.update(gens)
    return out


def conjugacy_partition(g) -> Set[FrozenSet[int]]:
    inv = [int(np.nonzero(g.mul[x] == 0)[0][0]) for x in range(g.order)]
    out = set()
    for x in range(g.order):
        out.add(frozenset(int(g.mul[g.mul[h, x], inv[h]]) for h in range(g.order)))
    return out


def imprimitive_dimension(g, primitive) -> int:
    """|G| minus the dimension of the two-sided ideal of C[G] generated by
    the cyclic-subgroup sums f_x = sum_i x^i over primitive x.

    An irreducible rho has a vector fixed by x exactly when rho(f_x) != 0,
    so this equals the sum of deg^2 over imprimitive irreducibles.
    """
    n = g.order
    mul = np.asarray(g.mul)
    inv = np.array([int(np.nonzero(mul[x] == 0)[0][0]) for x in range(n)])
    basis = np.zeros((0, n))
    for x in sorted(primitive):
        f = np.zeros(n)
        y = x
        while True:
            f[y] = 1.0
            if y == 0:
                break
            y = int(mul[y, x])
        # (a f b)[z] = f[a^-1 z b^-1]
        left = mul[inv][:, :]                    # left[a, z] = a^-1 z
        vecs = f[mul[left[:, :, None], inv[None, None, :]]]  # [a, z, b]
        vecs = vecs.transpose(0, 2, 1).reshape(-1, n)
        stacked = np.vstack([basis, vecs])
        u, s, vt = np.linalg.svd(stacked, full_matrices=False)
        r = int((s > 1e-8 * max(1.0, s[0])).sum())
        basis = vt[:r]
        if r == n:
            break
    return n - basis.shape[0]
