"""Group words and their text grammar.

Grammar (whitespace insignificant)::

    relation := word ('=' word)*
    word     := factor (('*')? factor)*  |  '1'
    factor   := atom ('^' integer)?
    atom     := identifier | '(' word ')' | '[' word ',' word ']'

``[x, y]`` expands to ``x y x^-1 y^-1``.  A relation ``u = v = w`` yields the
relators ``u v^-1`` and ``v w^-1``.
"""

from __future__ import annotations

import re
from typing import List, Sequence, Tuple

from .errors import GrammarError, SemanticError

Word = Tuple[Tuple[int, int], ...]


def reduce_word(letters: Sequence[Tuple[int, int]]) -> Word:
    """Merge adjacent powers of the same generator and drop zero exponents."""
    out: List[List[int]] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


def invert(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def concat(*ws: Word) -> Word:
    return reduce_word([x for w in ws for x in w])


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = invert(w), -k
    return reduce_word(list(w) * k)


def commutator(x: Word, y: Word) -> Word:
    return concat(x, y, invert(x), invert(y))


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    return "*".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in w)


_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<op>[\^\*\(\)\[\],=]))")


class _Parser:
    def __init__(self, text: str, names: Sequence[str], line: int = 1, col0: int = 1):
        self.text = text
        self.names = {n: i for i, n in enumerate(names)}
        self.line = line
        self.col0 = col0
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                self.fail("unexpected character", len(text) - len(text[pos:].lstrip()))
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def fail(self, msg: str, offset: int):
        raise GrammarError(msg, self.line, self.col0 + offset)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            self.fail(f"expected {value!r}", tok[2])
        self.i += 1
        return tok

    def relation(self) -> List[Word]:
        words = [self.word()]
        while self.peek()[1] == "=":
            self.take("=")
            words.append(self.word())
        if self.peek()[0] is not None:
            self.fail(f"unexpected token {self.peek()[1]!r}", self.peek()[2])
        return words

    def word(self) -> Word:
        kind, val, pos = self.peek()
        if kind == "int" and val == "1":
            self.take()
            return ()
        letters: List[Tuple[int, int]] = list(self.factor())
        while True:
            kind, val, pos = self.peek()
            if val == "*":
                self.take()
                letters += self.factor()
            elif kind == "ident" or val in ("(", "["):
                letters += self.factor()
            else:
                break
        return reduce_word(letters)

    def factor(self) -> Word:
        kind, val, pos = self.peek()
        if kind == "ident":
            self.take()
            if val not in self.names:
                raise SemanticError(f"line {self.line}, column {self.col0 + pos}: unknown generator {val!r}")
            w: Word = ((self.names[val], 1),)
        elif val == "(":
            self.take()
            w = self.word()
            self.take(")")
        elif val == "[":
            self.take()
            x = self.word()
            self.take(",")
            y = self.word()
            self.take("]")
            w = commutator(x, y)
        else:
            self.fail("expected generator, '(' or '['", pos)
        if self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                self.fail("expected integer exponent", pos)
            w = power(w, int(val))
        return w


def parse_word(text: str, names: Sequence[str], line: int = 1, column: int = 1) -> Word:
    p = _Parser(text, names, line, column)
    w = p.word()
    if p.peek()[0] is not None:
        p.fail(f"unexpected token {p.peek()[1]!r}", p.peek()[2])
    return w


def parse_relation(text: str, names: Sequence[str], line: int = 1, column: int = 1) -> List[Word]:
    """Relators (words equal to 1) expressed by ``text``."""
    words = _Parser(text, names, line, column).relation()
    if len(words) == 1:
        return [words[0]]
    return [concat(u, invert(v)) for u, v in zip(words, words[1:])]
