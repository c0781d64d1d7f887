"""Write the G128 character table fixture from the published table.

Character values are copied verbatim (A = 2*E(4), . = 0).  Class sizes come
from column orthogonality; element orders and power maps come from evaluating
the published class representatives in the group built from its presentation.

    python3 tools/transcribe_published.py > src/primhom/fixtures/g128_published.tbl
"""

from __future__ import annotations

import sys
from fractions import Fraction
from importlib import resources

from primhom.coset import evaluate_word
from primhom.cyclotomic import Cyclotomic
from primhom.formats import parse_group_file
from primhom.perm import conjugacy_classes
from primhom.words import parse_word

TABLE = """\
X.1      1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1
X.2      1 -1  1  1  1  1  1  1 -1 -1 -1  1  1  1  1  1  1 -1 -1 -1  1  1 -1
X.3      1  1 -1  1  1  1  1  1 -1  1  1 -1 -1  1  1  1  1 -1 -1  1 -1  1 -1
X.4      1 -1 -1  1  1  1  1  1  1 -1 -1 -1 -1  1  1  1  1  1  1 -1 -1  1  1
X.5      1  1  1 -1  1  1  1  1  1 -1  1 -1  1 -1  1  1  1 -1  1 -1 -1  1 -1
X.6      1 -1  1 -1  1  1  1  1 -1  1 -1 -1  1 -1  1  1  1  1 -1  1 -1  1  1
X.7      1  1 -1 -1  1  1  1  1 -1 -1  1  1 -1 -1  1  1  1  1 -1 -1  1  1  1
X.8      1 -1 -1 -1  1  1  1  1  1  1 -1  1 -1 -1  1  1  1 -1  1  1  1  1 -1
X.9      2  .  .  2 -2  2  2  2  .  .  .  .  . -2 -2 -2  2  .  .  .  . -2  .
X.10     2  .  . -2 -2  2  2  2  .  .  .  .  .  2 -2 -2  2  .  .  .  . -2  .
X.11     2  .  2  .  2 -2  2  2  .  .  .  . -2  . -2  2 -2  .  .  .  . -2  .
X.12     2  . -2  .  2 -2  2  2  .  .  .  .  2  . -2  2 -2  .  .  .  . -2  .
X.13     2  .  .  . -2 -2  2  2  .  .  .  A  .  .  2 -2 -2  .  .  . -A  2  .
X.14     2  .  .  . -2 -2  2  2  .  .  . -A  .  .  2 -2 -2  .  .  .  A  2  .
X.15     2  2  .  .  2  2 -2  2  .  . -2  .  .  .  2 -2 -2  .  .  .  . -2  .
X.16     2 -2  .  .  2  2 -2  2  .  .  2  .  .  .  2 -2 -2  .  .  .  . -2  .
X.17     2  .  .  . -2  2 -2  2  .  A  .  .  .  . -2  2 -2  .  . -A  .  2  .
X.18     2  .  .  . -2  2 -2  2  . -A  .  .  .  . -2  2 -2  .  .  A  .  2  .
X.19     2  .  .  .  2 -2 -2  2  A  .  .  .  .  . -2 -2  2  . -A  .  .  2  .
X.20     2  .  .  .  2 -2 -2  2 -A  .  .  .  .  . -2 -2  2  .  A  .  .  2  .
X.21     2  .  .  . -2 -2 -2  2  .  .  .  .  .  .  2  2  2 -2  .  .  . -2  2
X.22     2  .  .  . -2 -2 -2  2  .  .  .  .  .  .  2  2  2  2  .  .  . -2 -2
X.23*    8  .  .  .  .  .  . -8  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .
"""

# class representatives, in column order; juxtaposed letters are spaced
# because identifiers may be longer than one character
REPRESENTATIVES = [
    "1", "a", "b", "c", "[a,b]", "[a,c] a^4", "[b,c] a^4", "a^4", "a b", "a c",
    "a [b,c] a^4", "b c", "b [a,c] a^4", "c [a,b]", "[a,b] [a,c] a^4", "[a,b] [b,c] a^4",
    "[a,c] a^4 [b,c] a^4", "a b c", "a b [a,c] a^4", "a c [a,b]", "b c [a,b]",
    "[a,b] [a,c] [b,c]", "a b c [a,b]",
]

POWER_PRIMES = (2, 3)


def parse_entry(tok: str) -> Cyclotomic:
    if tok == ".":
        return Cyclotomic(0)
    if tok in ("A", "-A"):
        v = 2 * Cyclotomic.E(4)
        return -v if tok.startswith("-") else v
    return Cyclotomic(int(tok))


def rows():
    return [[parse_entry(t) for t in line.split()[1:]] for line in TABLE.splitlines()]


def class_sizes(values, order: int):
    sizes = []
    for c in range(len(values[0])):
        norm = sum((row[c] * row[c].conjugate()).rational() for row in values)
        size = Fraction(order) / norm
        assert size.denominator == 1, (c, size)
        sizes.append(int(size))
    return sizes


def representative_data():
    """Group, classes and the class index of each published representative."""
    text = resources.files("primhom.fixtures").joinpath("g128.grp").read_text()
    gf = parse_group_file(text)
    g = gf.build()
    classes = conjugacy_classes(g)
    where = {x: i for i, cl in enumerate(classes) for x in cl.members}
    assignment = {name: g.generator_indices[i] for i, name in enumerate(gf.generator_names)}
    reps = [evaluate_word(g, parse_word(w, gf.generator_names), gf.generator_names, assignment)
            for w in REPRESENTATIVES]
    return g, classes, where, reps


def main() -> int:
    values = rows()
    g, classes, where, reps = representative_data()
    column_of = {where[x]: j for j, x in enumerate(reps)}
    if len(column_of) != len(reps):
        raise SystemExit("representatives do not hit distinct classes")
    sizes = class_sizes(values, g.order)
    out = [
        "# G128 character table transcribed from the published table (A = 2*E(4), . = 0).",
        "# Sizes from column orthogonality; orders and power maps from the class representatives.",
        "format: chartab",
        f"order: {g.order}",
        "prime: 2",
        "conductor: 4",
    ]
    for j, x in enumerate(reps):
        powers = " ".join(f"p{q}={column_of[where[g.power(x, q)]] + 1}" for q in POWER_PRIMES)
        out.append(f"class {j + 1}: size={sizes[j]} order={g.element_orders[x]} {powers}")
        assert sizes[j] == classes[where[x]].size
    for r, row in enumerate(values):
        out.append(f"X.{r + 1}: " + ", ".join(str(v) for v in row))
    sys.stdout.write("\n".join(out) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
