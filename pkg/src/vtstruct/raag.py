"""Right-angled Artin groups over a finite commutation graph.

A word is a tuple of ``(generator, sign)`` letters.  Equal group elements get
equal shortlex normal forms, with letters ordered ``a0 < a0^-1 < a1 < ...``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import SimpleGraph

Letter = tuple  # (generator index, +1 or -1)
Word = tuple


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class CommutationGraph:
    underlying: SimpleGraph

    @property
    def n(self) -> int:
        return self.underlying.n

    @classmethod
    def from_edges(cls, n: int, edges) -> "CommutationGraph":
        return cls(SimpleGraph.from_edges(n, edges))

    def commute(self, i: int, j: int) -> bool:
        return i == j or self.underlying.adjacent(i, j)

    def check(self, w: Word) -> None:
        for gen, sign in w:
            if not 0 <= gen < self.n:
                raise WordError(f"generator a{gen} out of range for a graph on {self.n} vertices")
            if sign not in (1, -1):
                raise WordError(f"bad sign {sign!r}")


def letter_key(letter: Letter) -> tuple:
    gen, sign = letter
    return (gen, 0 if sign > 0 else 1)


def shortlex_key(w: Word) -> tuple:
    return (len(w), tuple(letter_key(x) for x in w))


_TOKEN = re.compile(r"^a(\d+)(\^-1|\^1)?$")


def parse_word(text: str) -> Word:
    """Parse ``"a0 a2^-1 a1"``; ``""`` and ``"e"`` are the empty word."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise WordError(f"cannot parse letter {tok!r}")
        letters.append((int(m.group(1)), -1 if m.group(2) == "^-1" else 1))
    return tuple(letters)


def format_word(w: Word) -> str:
    return " ".join(f"a{g}" if s > 0 else f"a{g}^-1" for g, s in w)


def label(w: Word) -> str:
    """Vertex label for a normal form; the identity is ``"e"``."""
    return format_word(w) or "e"


def inverse(w: Word) -> Word:
    return tuple((g, -s) for g, s in reversed(w))


def exponent_sum(w: Word) -> int:
    return sum(s for _, s in w)


def free_reduce(w: Word) -> Word:
    out: list = []
    for x in w:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def reduce_word(g: CommutationGraph, w: Word) -> Word:
    """Remove every cancelling pair ``x u x^-1`` whose middle commutes with x.

    Letters are appended one at a time; a new letter scans left past letters
    it commutes with and cancels the first same-generator letter it meets if
    that letter is its inverse.
    """
    out: list = []
    for gen, sign in w:
        j = len(out) - 1
        while j >= 0:
            h, t = out[j]
            if h == gen:
                break
            if not g.commute(h, gen):
                j = -1
                break
            j -= 1
        if j >= 0 and out[j] == (gen, -sign):
            del out[j]
        else:
            out.append((gen, sign))
    return tuple(out)


def normal_form(g: CommutationGraph, w: Word) -> Word:
    g.check(w)
    rest = list(reduce_word(g, w))
    nf: list = []
    while rest:
        best = None
        for p, x in enumerate(rest):
            # x can move to the front iff every earlier letter commutes with
            # it and none shares its generator
            if all(y[0] != x[0] and g.commute(y[0], x[0]) for y in rest[:p]):
                if best is None or letter_key(x) < letter_key(rest[best]):
                    best = p
        nf.append(rest.pop(best))
    return tuple(nf)


def words_equal(g: CommutationGraph, w1: Word, w2: Word) -> bool:
    return normal_form(g, w1) == normal_form(g, w2)


def multiply(g: CommutationGraph, *words: Word) -> Word:
    return normal_form(g, tuple(x for w in words for x in w))


def word_length(g: CommutationGraph, w: Word) -> int:
    return len(normal_form(g, w))


def generators(g: CommutationGraph):
    """The letters ``a_i`` and ``a_i^-1`` in shortlex order."""
    for i in range(g.n):
        yield (i, 1)
        yield (i, -1)
