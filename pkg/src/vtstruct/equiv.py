"""Eventual equality E_0 on one-sided words, and E_Z (shift equivalence)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .tournament import BitWindow, ShiftVerdict, WindowError, shift_equivalent, shift_witness

e_z_equivalent = shift_equivalent
e_z_witness = shift_witness


class UnresolvedTail(ValueError):
    pass


@dataclass(frozen=True)
class OneSidedWord:
    """prefix, then the tail repeated forever (a constant tail is a period-1 tail)."""

    prefix: tuple
    tail: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(b) for b in self.prefix))
        if self.tail is not None:
            tail = tuple(int(b) for b in self.tail)
            if not tail:
                raise ValueError("empty tail")
            object.__setattr__(self, "tail", tail)
        if any(b not in (0, 1) for b in self.prefix + (self.tail or ())):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def constant(cls, prefix, bit: int) -> "OneSidedWord":
        return cls(tuple(prefix), (bit,))

    @property
    def exact(self) -> bool:
        return self.tail is not None

    def __call__(self, n: int) -> int:
        if n < 0:
            raise IndexError("one-sided words start at 0")
        if n < len(self.prefix):
            return self.prefix[n]
        if self.tail is None:
            raise UnresolvedTail(f"position {n} is past the prefix and there is no tail")
        return self.tail[(n - len(self.prefix)) % len(self.tail)]

    def to_json(self) -> dict:
        if self.tail is None:
            tail = None
        elif len(self.tail) == 1:
            tail = {"kind": "constant", "bit": self.tail[0]}
        else:
            tail = {"kind": "periodic", "bits": list(self.tail)}
        return {"prefix": list(self.prefix), "tail": tail}

    @classmethod
    def from_json(cls, data: dict) -> "OneSidedWord":
        t = data.get("tail")
        if t is None:
            tail = None
        elif t["kind"] == "constant":
            tail = (int(t["bit"]),)
        elif t["kind"] == "periodic":
            tail = tuple(t["bits"])
        else:
            raise ValueError(f"unknown tail kind {t['kind']!r}")
        return cls(tuple(data["prefix"]), tail)


@dataclass(frozen=True)
class E0Verdict:
    equivalent: bool
    window_limited: bool
    last_disagreement: int | None = None


def e0_verdict(a: OneSidedWord, b: OneSidedWord, exact: bool = True) -> E0Verdict:
    """Do a and b agree from some point on?

    With tails on both sides the answer is exact: past both prefixes the
    words are periodic with period lcm of the tail lengths, so one such
    block decides it.  Without tails ``exact=True`` raises; otherwise the
    verdict only says whether the last position both prefixes cover agrees.
    """
    if a.exact and b.exact:
        n0 = max(len(a.prefix), len(b.prefix))
        L = math.lcm(len(a.tail), len(b.tail))
        if any(a(n) != b(n) for n in range(n0, n0 + L)):
            return E0Verdict(False, False)
        last = max((n for n in range(n0) if a(n) != b(n)), default=None)
        return E0Verdict(True, False, last)
    if exact:
        raise UnresolvedTail("exact E_0 needs an eventually periodic tail on both words")
    n = min(_known(a), _known(b))
    if n == 0:
        raise UnresolvedTail("no common coordinates to compare")
    last = max((i for i in range(n) if a(i) != b(i)), default=None)
    return E0Verdict(last != n - 1, True, last)


def _known(w: OneSidedWord) -> int:
    return len(w.prefix) if w.tail is None else len(w.prefix) + len(w.tail)


def e0_equivalent(a: OneSidedWord, b: OneSidedWord, exact: bool = True) -> bool:
    return e0_verdict(a, b, exact).equivalent


__all__ = [
    "OneSidedWord",
    "E0Verdict",
    "UnresolvedTail",
    "e0_equivalent",
    "e0_verdict",
    "e_z_equivalent",
    "e_z_witness",
    "BitWindow",
    "ShiftVerdict",
    "WindowError",
]
