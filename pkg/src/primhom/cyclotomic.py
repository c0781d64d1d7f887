"""Exact arithmetic in cyclotomic fields.

Values are stored over the Zumbroich basis of Q(E(n)), the same basis GAP
uses, and are always reduced to their minimal conductor.  Two values are
equal iff their (conductor, coefficients) pairs are equal.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Optional, Tuple, Union

Rational = Union[int, Fraction]


def _factorize(n: int) -> Dict[int, int]:
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


def _top_digit(e: int, n: int, p: int, nu: int) -> int:
    """Leading digit of the p-component of ``E(n)^e`` in Zumbroich coordinates."""
    q = p ** nu
    c = (e * pow(n // q, -1, q)) % q
    if p == 2:
        return (c >> (nu - 1)) & 1
    half = (p - 1) // 2
    for _ in range(nu - 1):
        d = c % p
        if d > half:
            d -= p
        c = (c - d) // p
    return c % p


@lru_cache(maxsize=None)
def _expansions(n: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """For every exponent e mod n, the expansion of E(n)^e in the basis."""
    fac = sorted(_factorize(n).items())
    table = []
    for e in range(n):
        vec = {e: 1}
        for p, nu in fac:
            step = n // p
            new: Dict[int, int] = {}
            for k, c in vec.items():
                bad = _top_digit(k, n, p, nu)
                if (p == 2 and bad == 1) or (p != 2 and bad == 0):
                    shifts = (1,) if p == 2 else range(1, p)
                    for i in shifts:
                        kk = (k + i * step) % n
                        new[kk] = new.get(kk, 0) - c
                else:
                    new[k] = new.get(k, 0) + c
            vec = {k: c for k, c in new.items() if c}
        table.append(tuple(sorted(vec.items())))
    return tuple(table)


@lru_cache(maxsize=None)
def zumbroich_basis(n: int) -> Tuple[int, ...]:
    """Exponents k such that E(n)^k belongs to the Zumbroich basis."""
    return tuple(e for e, exp in enumerate(_expansions(n)) if exp == ((e, 1),))


def _reduce(n: int, coeffs: Dict[int, Fraction]) -> Tuple[int, Dict[int, Fraction]]:
    """Rewrite in the basis of conductor ``n`` then shrink the conductor."""
    exps = _expansions(n)
    vec: Dict[int, Fraction] = {}
    for e, c in coeffs.items():
        if not c:
            continue
        for k, m in exps[e % n]:
            vec[k] = vec.get(k, 0) + c * m
    vec = {k: c for k, c in vec.items() if c}
    return _shrink(n, vec)


def _shrink(n: int, vec: Dict[int, Fraction]) -> Tuple[int, Dict[int, Fraction]]:
    if not vec:
        return 1, {}
    changed = True
    while changed and n > 1:
        changed = False
        if n % 4 == 2:
            # after reduction every exponent is even
            n //= 2
            vec = {k // 2: c for k, c in vec.items()}
            changed = True
            continue
        for p, nu in sorted(_factorize(n).items()):
            if nu >= 2 or p == 2:
                if all(k % p == 0 for k in vec):
                    if p == 2 and nu == 2:
                        # Q(E(n/2)) = Q(E(n/4)); exponents are then multiples of 4
                        n //= 4
                        vec = {k // 4: c for k, c in vec.items()}
                    else:
                        n //= p
                        vec = {k // p: c for k, c in vec.items()}
                    changed = True
                    break
            else:
                # p exactly divides n: the value lies in Q(E(n/p)) iff the
                # coefficients are constant along each orbit of E(p)
                step = n // p
                orbits: Dict[int, list] = {}
                for k in vec:
                    base = k % step
                    orbits.setdefault(base, []).append(k)
                ok = True
                new: Dict[int, Fraction] = {}
                for base, ks in orbits.items():
                    if len(ks) != p - 1:
                        ok = False
                        break
                    vals = {vec[k] for k in ks}
                    if len(vals) != 1:
                        ok = False
                        break
                    # the missing orbit member is the exponent divisible by p
                    e0 = next(base + i * step for i in range(p) if (base + i * step) % p == 0)
                    new[e0 // p] = -vals.pop()
                if ok:
                    n //= p
                    vec = new
                    changed = True
                    break
    if n == 1:
        return 1, {0: vec.get(0, Fraction(0))} if vec.get(0) else {}
    return n, vec


class NotARoot:
    """Marker returned by :meth:`Cyclotomic.root_order` for non-roots of unity."""

    _instance: Optional["NotARoot"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotARoot"


NOT_A_ROOT = NotARoot()


class Cyclotomic:
    """An immutable element of some cyclotomic field Q(E(n))."""

    __slots__ = ("conductor", "_coeffs", "_hash")

    def __init__(self, value: Rational = 0):
        v = Fraction(value)
        self.conductor = 1
        self._coeffs: Tuple[Tuple[int, Fraction], ...] = ((0, v),) if v else ()
        self._hash: Optional[int] = None

    @classmethod
    def _make(cls, n: int, vec: Dict[int, Fraction]) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj.conductor = n
        obj._coeffs = tuple(sorted((k, Fraction(c)) for k, c in vec.items() if c))
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(cls, n: int, coeffs: Dict[int, Rational]) -> "Cyclotomic":
        """Build sum(c * E(n)^k) from an exponent -> coefficient mapping."""
        if n < 1:
            raise ValueError("conductor must be positive")
        merged: Dict[int, Fraction] = {}
        for k, c in coeffs.items():
            merged[k % n] = merged.get(k % n, 0) + Fraction(c)
        return cls._make(*_reduce(n, merged))

    @classmethod
    def E(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls.from_exponents(n, {k: 1})

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return self._coeffs[0][1] if self._coeffs else Fraction(0)

    def _lift(self, m: int) -> Dict[int, Fraction]:
        s = m // self.conductor
        return {(k * s) % m: c for k, c in self._coeffs}

    @staticmethod
    def _coerce(other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return Cyclotomic(self.rational() + other.rational())
        m = math.lcm(self.conductor, other.conductor)
        vec = self._lift(m)
        for k, c in other._lift(m).items():
            vec[k] = vec.get(k, 0) + c
        return Cyclotomic._make(*_reduce(m, vec))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.conductor, {k: -c for k, c in self._coeffs})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.conductor == 1:
            r = other.rational()
            if not r:
                return Cyclotomic(0)
            return Cyclotomic._make(self.conductor, {k: c * r for k, c in self._coeffs})
        if self.conductor == 1:
            return other * self
        m = math.lcm(self.conductor, other.conductor)
        a, b = self._lift(m), other._lift(m)
        vec: Dict[int, Fraction] = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = (k1 + k2) % m
                vec[k] = vec.get(k, 0) + c1 * c2
        return Cyclotomic._make(*_reduce(m, vec))

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyclotomic":
        """Image under E(n) -> E(n)^k; k must be coprime to the conductor."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        if n == 1:
            return self
        return Cyclotomic._make(*_reduce(n, {(e * k) % n: c for e, c in self._coeffs}))

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the product of the nontrivial Galois conjugates."""
        if not self._coeffs:
            raise ZeroDivisionError("inverse of zero")
        n = self.conductor
        if n == 1:
            return Cyclotomic(1 / self.rational())
        others = Cyclotomic(1)
        for k in range(2, n):
            if math.gcd(k, n) == 1:
                others = others * self.galois(k)
        norm = self * others
        return others * (1 / norm.rational())

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self._coeffs))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def root_order(self) -> Union[int, NotARoot]:
        """Least k >= 1 with self**k == 1, or NOT_A_ROOT."""
        if not self._coeffs:
            return NOT_A_ROOT
        n = self.conductor
        # a root of unity in Q(E(n)) has order dividing lcm(2, n)
        bound = math.lcm(2, n)
        if len(self._coeffs) == 1:
            k, c = self._coeffs[0]
            if abs(c) != 1:
                return NOT_A_ROOT
        for d in sorted(_divisors(bound)):
            if self ** d == 1:
                return d
        return NOT_A_ROOT

    def to_complex(self) -> Tuple[float, float]:
        re_, im = 0.0, 0.0
        n = self.conductor
        for k, c in self._coeffs:
            angle = 2 * math.pi * k / n
            re_ += float(c) * math.cos(angle)
            im += float(c) * math.sin(angle)
        return re_, im

    def __complex__(self):
        return complex(*self.to_complex())

    def __str__(self):
        if not self._coeffs:
            return "0"
        n = self.conductor
        parts = []
        for k, c in self._coeffs:
            if n == 1 or k == 0:
                term, coeff = "", c
            else:
                term = f"E({n})" if k == 1 else f"E({n})^{k}"
                coeff = c
            if term == "":
                body = _fmt_rational(abs(coeff))
            elif abs(coeff) == 1:
                body = term
            else:
                body = f"{_fmt_rational(abs(coeff))}*{term}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"Cyclotomic({str(self)!r})"


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _divisors(n: int) -> Iterable[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


E = Cyclotomic.E

_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(\*)?\s*)?(E\(\s*(\d+)\s*\)(?:\s*\^\s*(-?\d+))?)?\s*"
)


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Parse GAP-style literals such as ``2*E(4)``, ``-E(9)^4-E(9)^7`` or ``3/2``."""
    s = text.strip()
    if not s:
        raise ValueError("empty cyclotomic literal")
    pos = 0
    total = Cyclotomic(0)
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse cyclotomic literal {text!r} at offset {pos}")
        sign, coeff, star, root, n, k = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        if coeff is None and root is None:
            raise ValueError(f"dangling sign in {text!r}")
        if star and root is None:
            raise ValueError(f"'*' without E(n) factor in {text!r}")
        if coeff is not None and root is not None and not star:
            raise ValueError(f"missing '*' between coefficient and root in {text!r}")
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            c = -c
        if root is not None:
            term = Cyclotomic.E(int(n), int(k) if k is not None else 1) * c
        else:
            term = Cyclotomic(c)
        total = total + term
        pos = m.end()
        first = False
    return total
