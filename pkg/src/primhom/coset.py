"""Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Mapping, Sequence

from .errors import InvalidWord, NotAPGroup, TableOverflow, UnboundGenerator
from .perm import Group, Permutation, generate_group
from .words import Word, parse_relation

DEFAULT_MAX_COSETS = 100_000


@dataclass
class Presentation:
    generator_names: List[str]
    relators: List[Word]

    @classmethod
    def from_strings(cls, names: Sequence[str], relations: Sequence[str]) -> "Presentation":
        rels: List[Word] = []
        for r in relations:
            rels += parse_relation(r, names)
        return cls(list(names), rels)

    def validate(self):
        k = len(self.generator_names)
        for w in self.relators:
            for i, (g, e) in enumerate(w):
                if not 0 <= g < k:
                    raise InvalidWord(f"generator index {g} out of range")
                if e == 0 or (i and w[i - 1][0] == g):
                    raise InvalidWord(f"relator {w} is not reduced")


class CosetTable:
    """Coset table with coincidence handling by union-find.

    Columns are ``2*g`` for generator ``g`` and ``2*g+1`` for its inverse.
    """

    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: List[List[int]] = [[-1] * self.ncols]
        self.parent: List[int] = [0]
        self.live = 1

    @staticmethod
    def inv_col(c: int) -> int:
        return c ^ 1

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> int:
        if self.live >= self.max_cosets:
            raise TableOverflow(f"coset table exceeded {self.max_cosets} cosets")
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return d

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def merge(self, a: int, b: int, queue: List[int]):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        self.parent[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int):
        queue: List[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f < 0:
                    continue
                # remove the back pointer from f
                if self.table[f][x ^ 1] == e:
                    self.table[f][x ^ 1] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] >= 0:
                    self.merge(f1, self.table[e1][x], queue)
                elif self.table[f1][x ^ 1] >= 0:
                    self.merge(e1, self.table[f1][x ^ 1], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][x ^ 1] = e1

    def scan_and_fill(self, c: int, word: List[int]):
        t = self.table
        n = len(word)
        f, i = c, 0
        b, j = c, n - 1
        while True:
            while i <= j and t[f][word[i]] >= 0:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][word[j] ^ 1] >= 0:
                b = t[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])


def _letters(w: Word) -> List[int]:
    out = []
    for g, e in w:
        col = 2 * g if e > 0 else 2 * g + 1
        out += [col] * abs(e)
    return out


def coset_table(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> List[List[int]]:
    """Closed, compacted coset table of the trivial subgroup."""
    pres.validate()
    ngens = len(pres.generator_names)
    ct = CosetTable(ngens, max_cosets)
    rels = [_letters(w) for w in pres.relators if w]
    c = 0
    while c < len(ct.table):
        if ct.alive(c):
            for r in rels:
                if not ct.alive(c):
                    break
                ct.scan_and_fill(c, r)
            if ct.alive(c):
                for x in range(ct.ncols):
                    if ct.table[c][x] < 0:
                        ct.define(c, x)
        c += 1
    live = [i for i in range(len(ct.table)) if ct.alive(i)]
    renum = {old: new for new, old in enumerate(live)}
    return [[renum[ct.rep(ct.table[i][x])] for x in range(ct.ncols)] for i in live]


def enumerate_presentation(pres: Presentation, prime: int, max_cosets: int = DEFAULT_MAX_COSETS) -> Group:
    """Regular permutation representation of the finitely presented group."""
    table = coset_table(pres, max_cosets)
    ngens = len(pres.generator_names)
    gens = [Permutation([row[2 * g] for row in table]) for g in range(ngens)]
    group = generate_group(gens, prime, degree=len(table), cap=max(len(table), 1))
    if group.order != len(table):
        raise NotAPGroup(f"enumerated {len(table)} cosets but the action has order {group.order}")
    assign = {name: group.generator_indices[i] for i, name in enumerate(pres.generator_names)}
    for w in pres.relators:
        if evaluate_word(group, w, pres.generator_names, assign) != 0:
            raise InvalidWord(f"relator {w} does not hold in the enumerated group")
    return group


def evaluate_word(group: Group, w: Word, names: Sequence[str], assignment: Mapping[str, int]) -> int:
    """Index of the element obtained by substituting ``assignment`` into ``w``."""
    x = 0
    for g, e in w:
        name = names[g]
        if name not in assignment:
            raise UnboundGenerator(f"generator {name!r} has no assigned element")
        x = group.multiply(x, group.power(assignment[name], e))
    return x
