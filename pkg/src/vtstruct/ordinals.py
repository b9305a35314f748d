"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` terms with strictly
decreasing exponents (themselves ordinals) and positive coefficients.  Text
form is ``w^2*3 + w + 4``; nested exponents are parenthesised, ``w^(w+1)``.
"""
from __future__ import annotations

import math
import re
from functools import lru_cache, total_ordering


class NotationError(ValueError):
    pass


def _cantor_pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


@lru_cache(maxsize=1 << 16)
def _cantor_unpair(z: int) -> tuple:
    w = (math.isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        terms = tuple((e if isinstance(e, Ordinal) else Ordinal.of(e), int(c)) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if c < 1:
                raise NotationError("coefficients must be positive")
            if i and not terms[i - 1][0] > e:
                raise NotationError("exponents must strictly decrease")
        self.terms = terms
        self._hash = hash(terms)

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise NotationError("negative ordinal")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, e, coeff: int = 1) -> "Ordinal":
        return cls(((e, coeff),))

    @classmethod
    def parse(cls, text: str) -> "Ordinal":
        return _Parser(text).parse()

    # --- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other) if other >= 0 else None
        return isinstance(other, Ordinal) and self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        return ord_compare(self, other) < 0

    # --- structure ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return all(e.is_zero() for e, _ in self.terms)

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def finite_value(self) -> int:
        if not self.is_finite():
            raise NotationError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def predecessor(self) -> "Ordinal":
        if not self.is_successor():
            raise NotationError(f"{self} is not a successor")
        *head, (e, c) = self.terms
        return Ordinal(tuple(head) + (((e, c - 1),) if c > 1 else ()))

    def limit_part(self) -> "Ordinal":
        return Ordinal(t for t in self.terms if not t[0].is_zero())

    def drop_one(self) -> "Ordinal":
        """The ordinal g with 1 + g == self (self >= 1)."""
        if self.is_zero():
            raise NotationError("0 has no such g")
        return self.predecessor() if self.is_finite() else self

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        if other.is_zero():
            return self
        lead = other.terms[0][0]
        head = [t for t in self.terms if t[0] > lead]
        same = [c for e, c in self.terms if e == lead]
        first = (lead, other.terms[0][1] + (same[0] if same else 0))
        return Ordinal(tuple(head) + (first,) + other.terms[1:])

    def __radd__(self, other):
        return Ordinal.of(other) + self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e.is_zero():
                parts.append(str(c))
                continue
            if e == ONE:
                base = "w"
            elif e.is_finite():
                base = f"w^{e.finite_value()}"
            elif e == OMEGA:
                base = "w^w"
            else:
                base = f"w^({e})"
            parts.append(base if c == 1 else f"{base}*{c}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Ordinal({str(self)!r})"

    # --- natural-number codes ---------------------------------------------
    def code(self) -> int:
        """Injective code: 0 for 0, else 1 + <<code(e), c-1>, code(rest)>."""
        if not self.terms:
            return 0
        (e, c), rest = self.terms[0], Ordinal(self.terms[1:])
        return 1 + _cantor_pair(_cantor_pair(e.code(), c - 1), rest.code())

    @classmethod
    def from_code(cls, n: int) -> "Ordinal | None":
        """Inverse of :meth:`code`; None when ``n`` is not in its image."""
        if n == 0:
            return ZERO
        head, rest_code = _cantor_unpair(n - 1)
        e_code, c1 = _cantor_unpair(head)
        e = cls.from_code(e_code)
        rest = cls.from_code(rest_code)
        if e is None or rest is None:
            return None
        if rest.terms and not e > rest.terms[0][0]:
            return None
        return cls(((e, c1 + 1),) + rest.terms)


ZERO = Ordinal.__new__(Ordinal)
ZERO.terms = ()
ZERO._hash = hash(())
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def ord_compare(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1: leading exponents, then coefficients, then tails."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


def ordinal_iso(a: Ordinal, b: Ordinal) -> bool:
    return a.terms == b.terms


def as_ordinal(x) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int):
        return Ordinal.of(x)
    if isinstance(x, str):
        return Ordinal.parse(x)
    raise TypeError(f"cannot read {x!r} as an ordinal")


class _Parser:
    _tok = re.compile(r"\s*(?:(\d+)|([wω])|(\^|\*|\+|\(|\)))")

    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = self._tok.match(text, pos)
            if not m:
                raise NotationError(f"unexpected character in {self.text!r} at {pos}")
            if m.group(1):
                self.toks.append(("int", int(m.group(1))))
            elif m.group(2):
                self.toks.append(("w", None))
            else:
                self.toks.append((m.group(3), None))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind):
        if self.peek() != kind:
            raise NotationError(f"expected {kind!r} in {self.text!r}")
        tok = self.toks[self.i]
        self.i += 1
        return tok[1]

    def parse(self) -> Ordinal:
        if not self.toks:
            raise NotationError("empty ordinal notation")
        val = self.expr()
        if self.i != len(self.toks):
            raise NotationError(f"trailing input in {self.text!r}")
        return val

    def expr(self) -> Ordinal:
        val = self.term()
        while self.peek() == "+":
            self.take("+")
            val = val + self.term()
        return val

    def atom(self) -> Ordinal:
        k = self.peek()
        if k == "int":
            return Ordinal.of(self.take("int"))
        if k == "w":
            self.take("w")
            return OMEGA
        if k == "(":
            self.take("(")
            v = self.expr()
            self.take(")")
            return v
        raise NotationError(f"unexpected token {k!r} in {self.text!r}")

    def term(self) -> Ordinal:
        k = self.peek()
        if k == "w":
            self.take("w")
            exp = ONE
            if self.peek() == "^":
                self.take("^")
                exp = self.atom()
            coeff = 1
            if self.peek() == "*":
                self.take("*")
                coeff = self.take("int")
            return Ordinal(((exp, coeff),)) if coeff else ZERO
        val = self.atom()
        if self.peek() == "*":
            self.take("*")
            n = self.take("int")
            if not val.is_finite():
                raise NotationError("only w-powers may carry a coefficient")
            val = Ordinal.of(val.finite_value() * n)
        return val
