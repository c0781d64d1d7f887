"""Exact character tables of finite p-groups by Dixon's method.

The class-sum matrices are diagonalised simultaneously over a prime field
F_q with q = 1 (mod exponent), and the resulting modular character values are
lifted to cyclotomic integers through discrete Fourier inversion over the
cyclic subgroup generated by each class representative.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import MalformedTable
from .perm import (
    ConjugacyClass,
    Group,
    PowerMap,
    _factor,
    class_labels,
    conjugacy_classes,
    power_map,
    prime_power_exponent,
)

DEFAULT_SEED = 20200801


@dataclass
class ClassAlgebra:
    """``coeffs[i, j, k]`` counts pairs (x, y) in C_i x C_j with x*y = g_k."""

    coeffs: np.ndarray
    sizes: Tuple[int, ...]
    element_orders: Tuple[int, ...]


@dataclass
class CharacterTable:
    order: int
    prime: int
    conductor: int
    class_sizes: Tuple[int, ...]
    element_orders: Tuple[int, ...]
    power_map: PowerMap
    values: List[List[Cyclotomic]]
    seed: Optional[int] = None

    @property
    def degrees(self) -> List[int]:
        return [int(row[0].rational()) for row in self.values]

    @property
    def nclasses(self) -> int:
        return len(self.class_sizes)

    def inverse_classes(self) -> List[int]:
        """Class of x^-1 for x in each class."""
        return [self.power_map(c, self.element_orders[c] - 1) for c in range(self.nclasses)]


def class_algebra(g: Group, classes: Sequence[ConjugacyClass]) -> ClassAlgebra:
    r = len(classes)
    lab = class_labels(g, classes)
    coeffs = np.zeros((r, r, r), dtype=np.int64)
    allx = np.arange(g.order)
    cx = lab[allx]
    for k, c in enumerate(classes):
        ys = g.mul[g.inv[allx], c.representative]
        np.add.at(coeffs[:, :, k], (cx, lab[ys]), 1)
    return ClassAlgebra(coeffs, tuple(c.size for c in classes), tuple(c.element_order for c in classes))


# --- linear algebra over F_q ----------------------------------------------

def _rref(m: np.ndarray, q: int) -> Tuple[np.ndarray, List[int]]:
    m = m.copy() % q
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        p = r + nz[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, q)) % q
        others = np.nonzero(m[:, c])[0]
        for o in others:
            if o != r:
                m[o] = (m[o] - m[o, c] * m[r]) % q
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _nullspace(m: np.ndarray, q: int) -> np.ndarray:
    """Basis (as rows) of {v : m v = 0}."""
    n = m.shape[1]
    red, piv = _rref(m, q)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(piv):
            basis[t, pc] = (-red[i, f]) % q
    return basis


def _charpoly(a: np.ndarray, q: int) -> List[int]:
    """Characteristic polynomial mod q, coefficients from the constant term up."""
    n = a.shape[0]
    h = [[int(x) % q for x in row] for row in a]
    # reduce to upper Hessenberg form by similarity transforms
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for row in h:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(h[m][m - 1], -1, q)
        for i in range(m + 1, n):
            u = h[i][m - 1] * inv % q
            if u:
                hi, hm = h[i], h[m]
                for j in range(n):
                    hi[j] = (hi[j] - u * hm[j]) % q
                for row in h:
                    row[m] = (row[m] + u * row[i]) % q
    # recurrence on leading principal submatrices
    polys: List[List[int]] = [[1]]
    for k in range(n):
        # p_{k+1}(x) = (x - h[k][k]) p_k(x) - sum_{i<k} h[i][k] * prod(h[j][j-1]) p_i(x)
        pk = polys[-1]
        nxt = [0] + pk[:]
        for i, c in enumerate(pk):
            nxt[i] = (nxt[i] - h[k][k] * c) % q
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = prod * h[i + 1][i] % q
            if not prod:
                break
            coef = h[i][k] * prod % q
            for t, c in enumerate(polys[i]):
                nxt[t] = (nxt[t] - coef * c) % q
        polys.append(nxt)
    return polys[-1]


def _roots(poly: Sequence[int], q: int) -> List[int]:
    out = []
    for x in range(q):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % q
        if acc == 0:
            out.append(x)
    return out


def _split_primes(e: int, order: int):
    """Least prime q = 1 (mod e) with q > 2 sqrt(order)."""
    q = e + 1
    while True:
        if q > 2 * math.isqrt(order) + 2 and _is_prime(q):
            return q
        q += e


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _primitive_root(q: int) -> int:
    fac = _factor(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // f, q) != 1 for f in fac):
            return g
    return 1


def _eigenvectors(mats: np.ndarray, q: int, rng: random.Random) -> List[np.ndarray]:
    """Common eigenvectors of the commuting matrices ``mats[j]`` (acting on columns)."""
    r = mats.shape[1]
    pending = [np.eye(r, dtype=np.int64)]
    done: List[np.ndarray] = []
    while pending:
        basis = pending.pop()
        d = basis.shape[0]
        if d == 1:
            done.append(basis[0])
            continue
        _, piv = _rref(basis, q)
        # basis rows are already in reduced echelon form
        split = None
        order = list(range(1, mats.shape[0]))
        attempts = [None, None, None] + order
        for choice in attempts:
            if choice is None:
                coef = np.array([rng.randrange(q) for _ in range(mats.shape[0])], dtype=np.int64)
                m = np.tensordot(coef, mats, axes=1) % q
            else:
                m = mats[choice]
            restricted = (m @ basis.T % q)[piv, :]
            lams = _roots(_charpoly(restricted, q), q)
            if len(lams) > 1:
                split = (restricted, lams)
                break
        if split is None:
            raise MalformedTable("class algebra does not split over the chosen prime field")
        restricted, lams = split
        for lam in lams:
            ns = _nullspace((restricted - lam * np.eye(d, dtype=np.int64)) % q, q)
            sub = ns @ basis % q
            sub, _ = _rref(sub, q)
            pending.append(sub)
    return done


def character_table(g: Group, classes: Optional[Sequence[ConjugacyClass]] = None,
                    seed: int = DEFAULT_SEED) -> CharacterTable:
    if classes is None:
        classes = conjugacy_classes(g)
    if prime_power_exponent(g.order, g.prime) is None:
        raise MalformedTable(f"order {g.order} is not a power of {g.prime}")
    pm = power_map(g, classes)
    r = len(classes)
    sizes = [c.size for c in classes]
    orders = [c.element_order for c in classes]
    e = g.exponent
    if g.order == 1:
        return CharacterTable(1, g.prime, 1, (1,), (1,), pm, [[Cyclotomic(1)]], seed)

    alg = class_algebra(g, classes)
    q = _split_primes(e, g.order)
    # mats[j][i][k] = a_{jik}: omega_j * omega_i = sum_k a_{jik} omega_k
    mats = alg.coeffs % q
    vecs = _eigenvectors(mats, q, random.Random(seed))
    if len(vecs) != r:
        raise MalformedTable("wrong number of eigenvectors")

    lab = class_labels(g, classes)
    powers = np.zeros((r, e), dtype=np.int64)
    for c, cl in enumerate(classes):
        x = 0
        for l in range(e):
            powers[c, l] = lab[x]
            x = g.multiply(x, cl.representative)
    invcls = [int(powers[c, orders[c] - 1]) for c in range(r)]

    z = pow(_primitive_root(q), (q - 1) // e, q)
    zpow = [pow(z, k, q) for k in range(e)]
    inv_e = pow(e, -1, q)
    rows: List[List[Cyclotomic]] = []
    bound = math.isqrt(g.order)
    for v in vecs:
        v = v * pow(int(v[0]), -1, q) % q
        s = sum(int(v[k]) * int(v[invcls[k]]) * pow(sizes[k], -1, q) for k in range(r)) % q
        d2 = g.order * pow(s, -1, q) % q
        deg = next((d for d in range(1, bound + 1) if d * d % q == d2 and g.order % d == 0), None)
        if deg is None:
            raise MalformedTable("no admissible degree for an eigenvector")
        modvals = [int(v[k]) * deg * pow(sizes[k], -1, q) % q for k in range(r)]
        row = []
        for c in range(r):
            coeffs = {}
            for j in range(e):
                acc = 0
                for l in range(e):
                    acc += modvals[powers[c, l]] * zpow[(-j * l) % e]
                m = acc * inv_e % q
                if m > deg:
                    raise MalformedTable("multiplicity out of range during lifting")
                if m:
                    coeffs[j] = m
            row.append(Cyclotomic.from_exponents(e, coeffs))
        rows.append(row)

    rows = _sort_rows(rows)
    table = CharacterTable(g.order, g.prime, e, tuple(sizes), tuple(orders), pm, rows, seed)
    validate(table)
    return table


def _sort_rows(rows: List[List[Cyclotomic]]) -> List[List[Cyclotomic]]:
    def key(row):
        trivial = all(v == 1 for v in row)
        return (not trivial, int(row[0].rational()), tuple(str(v) for v in row))
    return sorted(rows, key=key)


def linear_rows(t: CharacterTable) -> List[int]:
    return [i for i, d in enumerate(t.degrees) if d == 1]


def inner_product(t: CharacterTable, a: Sequence[Cyclotomic], b: Sequence[Cyclotomic]) -> Cyclotomic:
    """(1/|G|) sum |c| a(c) conj(b(c))."""
    acc = Cyclotomic(0)
    for c in range(t.nclasses):
        acc = acc + a[c] * b[c].conjugate() * t.class_sizes[c]
    return acc * Fraction(1, t.order)


def orthogonality_defects(t: CharacterTable) -> List[str]:
    """Every violated table invariant, as human-readable messages."""
    problems = []
    r = t.nclasses
    if len(t.values) != r:
        problems.append(f"{len(t.values)} rows for {r} classes")
        return problems
    if any(len(row) != r for row in t.values):
        problems.append("ragged table")
        return problems
    conj = [[v.conjugate() for v in row] for row in t.values]
    for i in range(r):
        for j in range(i, r):
            acc = Cyclotomic(0)
            for c in range(r):
                acc = acc + t.values[i][c] * conj[j][c] * t.class_sizes[c]
            want = t.order if i == j else 0
            if acc != want:
                problems.append(f"row orthogonality fails for rows {i + 1},{j + 1}")
    for c in range(r):
        for d in range(c, r):
            acc = Cyclotomic(0)
            for i in range(r):
                acc = acc + t.values[i][c] * conj[i][d]
            want = t.order // t.class_sizes[c] if c == d else 0
            if acc != want or (c == d and t.order % t.class_sizes[c]):
                problems.append(f"column orthogonality fails for classes {c + 1},{d + 1}")
    if sum(d * d for d in t.degrees) != t.order:
        problems.append("sum of squared degrees differs from the group order")
    if not all(v == 1 for v in t.values[0]):
        problems.append("first row is not the trivial character")
    lin = [tuple(t.values[i]) for i in linear_rows(t)]
    linset = set(lin)
    for a in lin:
        for b in lin:
            if tuple(x * y for x, y in zip(a, b)) not in linset:
                problems.append("linear characters are not closed under products")
                return problems
    return problems


def validate(t: CharacterTable):
    problems = orthogonality_defects(t)
    if problems:
        raise MalformedTable("; ".join(problems[:5]))


def galois_defects(t: CharacterTable) -> List[str]:
    """Check chi(f(c,k)) == galois_k(chi(c)) on linear rows, for units k with stored maps."""
    out = []
    for i in linear_rows(t):
        row = t.values[i]
        for c in range(t.nclasses):
            for k in range(1, t.conductor + 1):
                if math.gcd(k, t.conductor) != 1 or not t.power_map.covers(k):
                    continue
                if row[t.power_map(c, k)] != row[c].galois(k):
                    out.append(f"row {i + 1}, class {c + 1}, k={k}")
    return out


# --- table comparison -------------------------------------------------------

def find_bijection(a: CharacterTable, b: CharacterTable,
                   column_hint: Optional[Sequence[int]] = None) -> Optional[Tuple[List[int], List[int]]]:
    """Find (col_map, row_map) with b.values[row_map[i]][col_map[c]] == a.values[i][c].

    Columns are matched by backtracking over classes with equal size and
    element order; rows are then matched exactly.  ``column_hint``, when
    given, fixes the column map and only rows are searched.
    """
    r = a.nclasses
    if r != b.nclasses or a.order != b.order:
        return None
    acols = [tuple(a.values[i][c] for i in range(r)) for c in range(r)]
    bcols = [tuple(b.values[i][c] for i in range(r)) for c in range(r)]

    def colkey(t, cols, c):
        return (t.class_sizes[c], t.element_orders[c], tuple(sorted(map(str, cols[c]))))

    akeys = [colkey(a, acols, c) for c in range(r)]
    bkeys = [colkey(b, bcols, c) for c in range(r)]

    def rows_for(colmap: Sequence[int], upto: int):
        # partition rows of a and b by their values on the mapped prefix
        asig: Dict[tuple, int] = {}
        bsig: Dict[tuple, int] = {}
        for i in range(r):
            ka = tuple(a.values[i][c] for c in range(upto))
            kb = tuple(b.values[i][colmap[c]] for c in range(upto))
            asig[ka] = asig.get(ka, 0) + 1
            bsig[kb] = bsig.get(kb, 0) + 1
        return asig == bsig

    def match_rows(colmap):
        rowmap = [-1] * r
        used = set()
        for i in range(r):
            target = tuple(a.values[i])
            for j in range(r):
                if j not in used and tuple(b.values[j][colmap[c]] for c in range(r)) == target:
                    rowmap[i] = j
                    used.add(j)
                    break
            else:
                return None
        return rowmap

    if column_hint is not None:
        rowmap = match_rows(list(column_hint))
        return (list(column_hint), rowmap) if rowmap is not None else None

    colmap: List[int] = []
    used: set = set()

    def search(c):
        if c == r:
            return match_rows(colmap)
        for d in range(r):
            if d in used or bkeys[d] != akeys[c]:
                continue
            colmap.append(d)
            used.add(d)
            if rows_for(colmap, c + 1):
                res = search(c + 1)
                if res is not None:
                    return res
            colmap.pop()
            used.discard(d)
        return None

    rowmap = search(0)
    if rowmap is None:
        return None
    return list(colmap), rowmap
