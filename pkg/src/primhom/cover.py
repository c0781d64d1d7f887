"""G-covers of the rose and the character of G acting on their first homology."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .chartab import CharacterTable
from .cyclotomic import Cyclotomic
from .errors import GaschutzViolation, NotGenerating, WrongPetalCount
from .perm import ConjugacyClass, Group, rank


@dataclass
class RoseCover:
    """Cayley graph of ``group`` on ``petals``: an edge x -> x*s for each petal s."""

    group: Group
    petals: Tuple[int, ...]
    edges: List[Tuple[int, int, int]]  # (tail, petal index, head)

    @property
    def n(self) -> int:
        return len(self.petals)

    @property
    def num_vertices(self) -> int:
        return self.group.order

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def build_cover(g: Group, petal_generators: Sequence[int]) -> RoseCover:
    petals = tuple(int(x) for x in petal_generators)
    if g.order > 1 and len(petals) != rank(g):
        raise WrongPetalCount(f"{len(petals)} petals but the group has rank {rank(g)}")
    if len(g.closure(petals)) != g.order:
        raise NotGenerating("petal elements do not generate the group")
    edges = [(x, i, g.multiply(x, s)) for x in range(g.order) for i, s in enumerate(petals)]
    return RoseCover(g, petals, edges)


def h1_character(cover: RoseCover, classes: Sequence[ConjugacyClass]) -> List[Cyclotomic]:
    """Trace of each class representative on H_1(Y; C), by Lefschetz counting.

    Deck transformations act by left multiplication, so trace(C_1) - trace(C_0)
    = trace(H_1) - trace(H_0) with H_0 the trivial module.
    """
    g = cover.group
    out = []
    for cl in classes:
        h = cl.representative
        fixed_v = sum(1 for x in range(g.order) if g.multiply(h, x) == x)
        fixed_e = sum(1 for (x, i, y) in cover.edges if g.multiply(h, x) == x and g.multiply(h, y) == y)
        out.append(Cyclotomic(fixed_e - fixed_v + 1))
    return out


def verify_gaschutz(cover: RoseCover, classes: Sequence[ConjugacyClass], t: CharacterTable) -> List[int]:
    """Multiplicity of each irreducible in H_1; checked against (n-1) deg + [trivial]."""
    chi = h1_character(cover, classes)
    n = cover.n
    mults = []
    for r, row in enumerate(t.values):
        acc = Cyclotomic(0)
        for c in range(t.nclasses):
            acc = acc + chi[c] * row[c].conjugate() * t.class_sizes[c]
        m = acc * Fraction(1, t.order)
        if not m.is_rational() or m.rational().denominator != 1 or m.rational() < 0:
            raise GaschutzViolation(f"multiplicity of X.{r + 1} is {m}", row=r)
        mults.append(int(m.rational()))
    for r, m in enumerate(mults):
        want = (n - 1) * t.degrees[r] + (1 if r == 0 else 0)
        if m != want:
            raise GaschutzViolation(f"X.{r + 1} occurs {m} times, expected {want}", row=r)
    return mults
