"""Lexicographic powers of Z, condensation, and coded orders.

``ZElement`` is a finitely supported map from ordinals to nonzero integers;
``z_compare`` orders them reverse-lexicographically (the greatest differing
position decides).  ``z_power_code`` builds a comparator on natural-number
codes for Z^alpha by recursion on alpha: Z at 1, a pairing product at
successors, and a mirrored two-sided sum at limits.
"""
from __future__ import annotations

import functools
import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .ordinals import ONE, ZERO, NotationError, Ordinal, _cantor_pair, _cantor_unpair, as_ordinal, ord_compare


class UnsupportedTerm(ValueError):
    pass


class InconclusiveSample(RuntimeError):
    """The sample ran out before a verdict could be reached."""


# ---------------------------------------------------------------------------
# Z^alpha elements


@dataclass(frozen=True)
class ZElement:
    support: tuple = ()  # ((position, value), ...) positions increasing, values nonzero

    def __post_init__(self):
        sup = tuple((as_ordinal(p), int(v)) for p, v in self.support)
        for i, (p, v) in enumerate(sup):
            if v == 0:
                raise ValueError("support values must be nonzero")
            if i and not sup[i - 1][0] < p:
                raise ValueError("support positions must increase")
        object.__setattr__(self, "support", sup)

    @classmethod
    def of(cls, mapping: dict) -> "ZElement":
        items = [(as_ordinal(p), v) for p, v in mapping.items() if v]
        return cls(tuple(sorted(items, key=functools.cmp_to_key(lambda a, b: ord_compare(a[0], b[0])))))

    def as_dict(self) -> dict:
        return dict(self.support)

    def top(self) -> Ordinal | None:
        return self.support[-1][0] if self.support else None

    def negate(self) -> "ZElement":
        return ZElement(tuple((p, -v) for p, v in self.support))

    def below(self, mu: Ordinal) -> "ZElement":
        return ZElement(tuple((p, v) for p, v in self.support if p < mu))

    def __str__(self):
        return "{" + ", ".join(f"{p}: {v}" for p, v in self.support) + "}"


def z_compare(alpha, s: ZElement, t: ZElement) -> int:
    """-1, 0, 1 as s <, =, > t in Z^alpha."""
    alpha = as_ordinal(alpha)
    for e in (s, t):
        if e.support and not e.support[-1][0] < alpha:
            raise ValueError(f"position {e.support[-1][0]} is not below {alpha}")
    i, j = len(s.support) - 1, len(t.support) - 1
    while i >= 0 or j >= 0:
        ps = s.support[i][0] if i >= 0 else None
        pt = t.support[j][0] if j >= 0 else None
        if pt is None or (ps is not None and ps > pt):
            return 1 if s.support[i][1] > 0 else -1
        if ps is None or pt > ps:
            return -1 if t.support[j][1] > 0 else 1
        vs, vt = s.support[i][1], t.support[j][1]
        if vs != vt:
            return -1 if vs < vt else 1
        i -= 1
        j -= 1
    return 0


# ---------------------------------------------------------------------------
# symbolic order terms


class SymbolicOrder:
    pass


@dataclass(frozen=True)
class One(SymbolicOrder):
    def __str__(self):
        return "One"


@dataclass(frozen=True)
class Q(SymbolicOrder):
    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class ZPow(SymbolicOrder):
    alpha: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_ordinal(self.alpha))

    def __str__(self):
        return "Z" if self.alpha == ONE else f"ZPow({self.alpha})"


@dataclass(frozen=True)
class Fin(SymbolicOrder):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("Fin(n) needs n >= 2; use One for a point")

    def __str__(self):
        return f"Fin({self.n})"


@dataclass(frozen=True)
class Prod(SymbolicOrder):
    """``right``-many copies of ``left`` (so Prod(ZPow(a), Z) is Z^(a+1))."""

    left: SymbolicOrder
    right: SymbolicOrder

    def __str__(self):
        return f"Prod({self.left}, {self.right})"


Z = ZPow(ONE)


def simplify(t: SymbolicOrder) -> SymbolicOrder:
    if isinstance(t, ZPow) and t.alpha.is_zero():
        return One()
    if isinstance(t, Prod):
        left, right = simplify(t.left), simplify(t.right)
        if left == One():
            return right
        if right == One():
            return left
        return Prod(left, right)
    return t


def parse_order(text: str) -> SymbolicOrder:
    """Read ``Prod(ZPow(w+1), Q)``, ``Z``, ``Q``, ``One``, ``Fin(3)``."""
    text = text.strip()
    if text in ("One", "1"):
        return One()
    if text == "Q":
        return Q()
    if text == "Z":
        return Z
    m = re.fullmatch(r"Fin\(\s*(\d+)\s*\)", text)
    if m:
        return Fin(int(m.group(1)))
    m = re.fullmatch(r"ZPow\((.*)\)", text)
    if m:
        return ZPow(Ordinal.parse(m.group(1)))
    if text.startswith("Prod(") and text.endswith(")"):
        inner = text[5:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return Prod(parse_order(inner[:i]), parse_order(inner[i + 1:]))
    raise UnsupportedTerm(f"cannot parse order term {text!r}")


@dataclass(frozen=True)
class _Shape:
    # Z^alpha . tail, tail in {"1", "Q", "fin"}; "other" = not VT, no closed form
    alpha: Ordinal
    tail: str
    m: int = 0
    reason: str = ""


def _factors(t: SymbolicOrder) -> list:
    if isinstance(t, Prod):
        return _factors(t.left) + _factors(t.right)
    return [t]


def _atom_shape(a: SymbolicOrder) -> _Shape:
    if isinstance(a, One):
        return _Shape(ZERO, "1")
    if isinstance(a, Q):
        return _Shape(ZERO, "Q")
    if isinstance(a, ZPow):
        return _Shape(a.alpha, "1")
    if isinstance(a, Fin):
        return _Shape(ZERO, "fin", a.n)
    raise UnsupportedTerm(f"unsupported order term {a!r}")


def _combine(a: SymbolicOrder, b: _Shape) -> _Shape:
    """Shape of ``a . b`` (b-many copies of the atom a)."""
    if isinstance(a, One):
        return b
    if isinstance(a, Q):
        # any countable nonempty sum of copies of Q is dense without endpoints
        return _Shape(ZERO, "Q")
    if isinstance(a, ZPow):
        if b.tail == "other":
            return _Shape(ZERO, "other", reason=f"Z^{a.alpha} copies indexed by a non-VT order")
        return _Shape(a.alpha + b.alpha, b.tail, b.m)
    if isinstance(a, Fin):
        if b.tail == "other":
            raise UnsupportedTerm(f"{a} copies over a non-VT order")
        if not b.alpha.is_zero():
            return b  # n . Z = Z
        if b.tail == "1":
            return _Shape(ZERO, "fin", a.n)
        if b.tail == "fin":
            return _Shape(ZERO, "fin", a.n * b.m)
        return _Shape(ZERO, "other", reason=f"{a} blocks ordered like Q mix left-discrete and left-dense points")
    raise UnsupportedTerm(f"unsupported order term {a!r}")


def shape(t: SymbolicOrder) -> _Shape:
    fs = _factors(t)
    sh = _atom_shape(fs[-1])
    for a in reversed(fs[:-1]):
        sh = _combine(a, sh)
    return sh


def _term(sh: _Shape) -> SymbolicOrder:
    tail = {"1": One(), "Q": Q()}.get(sh.tail) if sh.tail != "fin" else Fin(sh.m)
    if sh.alpha.is_zero():
        return tail
    return ZPow(sh.alpha) if tail == One() else Prod(ZPow(sh.alpha), tail)


def condense(t: SymbolicOrder) -> SymbolicOrder:
    """The condensation L' of the order denoted by ``t``, up to isomorphism.

    Z^a . T condenses to Z^g . T with 1 + g = a, so finite exponents drop by
    one and infinite ones are unchanged as order types.
    """
    sh = shape(t)
    if sh.tail == "other":
        raise UnsupportedTerm(f"no closed form for the condensation of {t} ({sh.reason})")
    if not sh.alpha.is_zero():
        return _term(_Shape(sh.alpha.drop_one(), sh.tail, sh.m))
    return Q() if sh.tail == "Q" else One()


def is_condensation_fixed_point(t: SymbolicOrder) -> bool:
    sh = shape(t)
    return sh.alpha.is_zero() and sh.tail in ("1", "Q")


@dataclass(frozen=True)
class Classification:
    vertex_transitive: bool
    alpha: Ordinal | None = None
    tail: str | None = None  # "One" or "Q"
    reason: str = ""

    def __str__(self):
        if not self.vertex_transitive:
            return f"not vertex-transitive ({self.reason})"
        return f"({self.alpha}, {self.tail})"


def classify_vt(t: SymbolicOrder) -> Classification:
    """Z^alpha or Z^alpha . Q for vertex-transitive terms, else a negative verdict."""
    sh = shape(t)
    if sh.tail == "fin":
        return Classification(False, reason=f"its rank-{sh.alpha} condensation is a {sh.m}-element order, which has endpoints")
    if sh.tail == "other":
        return Classification(False, reason=sh.reason)
    return Classification(True, sh.alpha, "One" if sh.tail == "1" else "Q")


def condensation_steps(t: SymbolicOrder, limit: int = 10_000) -> int:
    """Count condense() applications until a condensation fixed point (finite ranks only)."""
    steps = 0
    while not is_condensation_fixed_point(t):
        if not shape(t).alpha.is_finite():
            raise UnsupportedTerm("transfinitely many condensation steps; use classify_vt")
        if steps >= limit:
            raise RuntimeError("step limit reached")
        t = condense(t)
        steps += 1
    return steps


# ---------------------------------------------------------------------------
# coded orders on natural numbers


def ord_sub_left(beta: Ordinal, p: Ordinal) -> Ordinal | None:
    """The g with beta + g == p, or None if p < beta."""
    if p < beta:
        return None
    i = 0
    bt, pt = beta.terms, p.terms
    while i < len(bt) and i < len(pt) and bt[i] == pt[i]:
        i += 1
    if i == len(bt):
        return Ordinal(pt[i:])
    (eb, cb), (ep, cp) = bt[i], pt[i]
    if eb == ep:
        return Ordinal(((ep, cp - cb),) + pt[i + 1:])
    return Ordinal(pt[i:])


def _zigzag(n: int) -> int:
    return n // 2 if n % 2 == 0 else -(n + 1) // 2


def _unzigzag(v: int) -> int:
    return 2 * v if v >= 0 else -2 * v - 1


class OrderCode:
    """A strict linear order on a decidable set of natural numbers."""

    alpha: Ordinal | None = None
    finite_size: int | None = None

    def contains(self, n: int) -> bool:
        raise NotImplementedError

    def less(self, n: int, m: int) -> bool:
        raise NotImplementedError

    def decode(self, n: int) -> ZElement:
        raise NotImplementedError(f"{type(self).__name__} has no Z^alpha reading")

    def encode(self, s: ZElement) -> int | None:
        raise NotImplementedError(f"{type(self).__name__} has no Z^alpha reading")

    def sample(self, rng: random.Random) -> int:
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    def elements(self, count: int, scan_limit: int = 1_000_000):
        """The first ``count`` members of the domain in numeric order."""
        out = []
        n = 0
        while len(out) < count and n < scan_limit:
            if self.contains(n):
                out.append(n)
            n += 1
            if self.finite_size is not None and len(out) == self.finite_size:
                break
        return out

    def compare(self, n: int, m: int) -> int:
        return -1 if self.less(n, m) else (1 if self.less(m, n) else 0)


class PointCode(OrderCode):
    alpha = ZERO
    finite_size = 1

    def contains(self, n):
        return n == 0

    def less(self, n, m):
        return False

    def decode(self, n):
        return ZElement()

    def encode(self, s):
        return 0 if not s.support else None

    def sample(self, rng):
        return 0

    def describe(self):
        return {"kind": "point", "parameters": {}}


class IntCode(OrderCode):
    """Z on all of N via 0, -1, 1, -2, 2, ..."""

    alpha = ONE

    def __init__(self, spread: int = 8):
        self.spread = spread

    def contains(self, n):
        return n >= 0

    def less(self, n, m):
        return _zigzag(n) < _zigzag(m)

    def decode(self, n):
        v = _zigzag(n)
        return ZElement(((ZERO, v),)) if v else ZElement()

    def encode(self, s):
        if s.support and (len(s.support) > 1 or s.support[0][0] != ZERO):
            return None
        return _unzigzag(s.support[0][1] if s.support else 0)

    def sample(self, rng):
        return _unzigzag(rng.randint(-self.spread, self.spread))

    def describe(self):
        return {"kind": "int", "parameters": {"enumeration": "zigzag"}}


class RationalCode(OrderCode):
    """Q as dyadic rationals: n = <a, k> codes zigzag(a) / 2^k in lowest terms."""

    def contains(self, n):
        a, k = _cantor_unpair(n)
        return k == 0 or _zigzag(a) % 2 != 0

    def value(self, n) -> Fraction:
        a, k = _cantor_unpair(n)
        return Fraction(_zigzag(a), 2 ** k)

    def less(self, n, m):
        return self.value(n) < self.value(m)

    def sample(self, rng):
        while True:
            n = _cantor_pair(rng.randint(0, 60), rng.randint(0, 5))
            if self.contains(n):
                return n

    def describe(self):
        return {"kind": "rational", "parameters": {"enumeration": "dyadic"}}


class ProductCode(OrderCode):
    """``outer``-many copies of ``inner``; code <n0, n1>, n1 decides first."""

    def __init__(self, inner: OrderCode, outer: OrderCode):
        self.inner, self.outer = inner, outer
        if inner.alpha is not None and outer.alpha is not None:
            self.alpha = inner.alpha + outer.alpha
        if inner.finite_size is not None and outer.finite_size is not None:
            self.finite_size = inner.finite_size * outer.finite_size

    def contains(self, n):
        n0, n1 = _cantor_unpair(n)
        return self.inner.contains(n0) and self.outer.contains(n1)

    def less(self, n, m):
        n0, n1 = _cantor_unpair(n)
        m0, m1 = _cantor_unpair(m)
        if n1 != m1:
            return self.outer.less(n1, m1)
        return self.inner.less(n0, m0)

    def decode(self, n):
        n0, n1 = _cantor_unpair(n)
        shift = self.inner.alpha
        low = self.inner.decode(n0).support
        high = tuple((shift + p, v) for p, v in self.outer.decode(n1).support)
        return ZElement(low + high)

    def encode(self, s):
        shift = self.inner.alpha
        low = ZElement(tuple(t for t in s.support if t[0] < shift))
        high = ZElement(tuple((ord_sub_left(shift, p), v) for p, v in s.support if not p < shift))
        n0, n1 = self.inner.encode(low), self.outer.encode(high)
        if n0 is None or n1 is None:
            return None
        return _cantor_pair(n0, n1)

    def sample(self, rng):
        # code 0 is the zero element in every Z^alpha code; using it often
        # keeps nested pairings from squaring the code size at every level
        inner = self.inner.sample(rng) if rng.random() < 0.5 else 0
        return _cantor_pair(inner, self.outer.sample(rng))

    def describe(self):
        return {"kind": "product", "parameters": {"inner": self.inner.describe(), "outer": self.outer.describe()}}


class LimitCode(OrderCode):
    """Z^lam for limit lam as (sum_{mu<lam} Z^mu . w)^* + 1 + sum_{mu<lam} Z^mu . w.

    Code 0 is the middle point.  Otherwise n - 1 = 2q + side (side 0 right,
    1 left) and q = <<code(mu), j - 1>, e> with e a code of Z^mu.
    """

    def __init__(self, lam: Ordinal):
        if not lam.is_limit():
            raise ValueError(f"{lam} is not a limit ordinal")
        self.alpha = lam

    def _parts(self, n):
        q, side = divmod(n - 1, 2)
        head, e = _cantor_unpair(q)
        mu_code, j1 = _cantor_unpair(head)
        return side, Ordinal.from_code(mu_code), j1 + 1, e

    def contains(self, n):
        if n == 0:
            return True
        side, mu, j, e = self._parts(n)
        return mu is not None and mu < self.alpha and z_power_code(mu).contains(e)

    def _right_less(self, a, b):
        _, mu_a, j_a, e_a = a
        _, mu_b, j_b, e_b = b
        c = ord_compare(mu_a, mu_b)
        if c:
            return c < 0
        if j_a != j_b:
            return j_a < j_b
        return z_power_code(mu_a).less(e_a, e_b)

    def less(self, n, m):
        # left part < middle < right part; the left part is the right part reversed
        rank_n = 0 if n == 0 else (1 if (n - 1) % 2 == 0 else -1)
        rank_m = 0 if m == 0 else (1 if (m - 1) % 2 == 0 else -1)
        if rank_n != rank_m:
            return rank_n < rank_m
        if rank_n == 0:
            return False
        pn, pm = self._parts(n), self._parts(m)
        return self._right_less(pn, pm) if rank_n > 0 else self._right_less(pm, pn)

    def decode(self, n):
        if n == 0:
            return ZElement()
        side, mu, j, e = self._parts(n)
        s = ZElement(z_power_code(mu).decode(e).support + ((mu, j),))
        return s.negate() if side else s

    def encode(self, s):
        if not s.support:
            return 0
        mu, v = s.support[-1]
        if not mu < self.alpha:
            return None
        side = 0 if v > 0 else 1
        rest = ZElement(s.support[:-1])
        e = z_power_code(mu).encode(rest if side == 0 else rest.negate())
        if e is None:
            return None
        q = _cantor_pair(_cantor_pair(mu.code(), abs(v) - 1), e)
        return 2 * q + side + 1

    def sample(self, rng):
        if rng.random() < 0.05:
            return 0
        mu = rng.choice(positions_below(self.alpha))
        j = rng.randint(1, 6)
        e = z_power_code(mu).sample(rng) if rng.random() < 0.5 else 0
        return 2 * _cantor_pair(_cantor_pair(mu.code(), j - 1), e) + rng.randint(0, 1) + 1

    def describe(self):
        return {"kind": "limit", "parameters": {"lambda": str(self.alpha)}}


@functools.lru_cache(maxsize=None)
def z_power_code(alpha) -> OrderCode:
    """Comparator on codes realising Z^alpha, built by recursion on alpha."""
    alpha = as_ordinal(alpha)
    if alpha.is_zero():
        return PointCode()
    if alpha == ONE:
        return IntCode()
    if alpha.is_successor():
        # Z^(b+1) = Z^b . Z: the Z-coordinate is the significant one
        return ProductCode(z_power_code(alpha.predecessor()), IntCode())
    return LimitCode(alpha)


def order_code(t: SymbolicOrder) -> OrderCode:
    """A code for a vertex-transitive term: Z^alpha or Z^alpha . Q."""
    c = classify_vt(t)
    if not c.vertex_transitive:
        raise UnsupportedTerm(f"{t} is {c}")
    if c.tail == "One":
        return z_power_code(c.alpha)
    if c.alpha.is_zero():
        return RationalCode()
    return ProductCode(z_power_code(c.alpha), RationalCode())


@functools.lru_cache(maxsize=None)
def _positions_below(alpha: Ordinal, width: int) -> tuple:
    """A finite, deterministic spread of ordinals below alpha, dense near the top."""
    out = set(Ordinal.of(k) for k in range(min(width, alpha.finite_value()) if alpha.is_finite() else width + 1))
    if alpha.is_zero():
        return ()
    if alpha.is_successor():
        pred = alpha.predecessor()
        out.add(pred)
        out.update(_positions_below(pred, width))
    else:
        *head, (e, c) = alpha.terms
        base = Ordinal(tuple(head) + (((e, c - 1),) if c > 1 else ()))
        # just below base + w^e
        if e.is_successor():
            step = Ordinal.omega_power(e.predecessor())
            for k in range(width + 1):
                top = base
                for _ in range(k):
                    top = top + step
                out.add(top)
                out.update(top + Ordinal.of(i) for i in range(2))
        else:
            for d in _positions_below(e, width):
                out.add(base + Ordinal.omega_power(d))
        if not base.is_zero():
            out.update(_positions_below(base, width))
    out = {p for p in out if p < alpha}
    return tuple(sorted(out, key=functools.cmp_to_key(ord_compare)))


def positions_below(alpha, width: int = 6) -> tuple:
    return _positions_below(as_ordinal(alpha), width)


def sample_zelement(alpha, rng: random.Random, max_support: int = 3, spread: int = 6) -> ZElement:
    """A random element of Z^alpha.

    The top position is drawn from ``positions_below``; the others share its
    limit part.  Supports spread across many limit blocks have codes whose
    size doubles at every product level in between, so they are avoided.
    """
    alpha = as_ordinal(alpha)
    if alpha.is_zero():
        return ZElement()
    pos = positions_below(alpha)
    k = rng.randint(0, min(max_support, len(pos)))
    if not k:
        return ZElement()
    # half the time take one of the highest positions, where Z^alpha and
    # Z^(alpha+1) differ
    top = rng.choice(pos[-3:] if rng.random() < 0.5 else pos)
    block = [p for p in pos if p < top and p.limit_part() == top.limit_part()]
    chosen = [top] + rng.sample(block, min(k - 1, len(block)))
    vals = {p: rng.choice([v for v in range(-spread, spread + 1) if v]) for p in chosen}
    return ZElement.of(vals)


def code_compare_with_symbolic(alpha, code: OrderCode, sample_size: int = 200, seed: int = 0,
                               scan_limit: int = 100_000) -> bool:
    """Does ``code`` look like Z^alpha on a sample?

    Forth: sampled codes must read as elements of Z^alpha, in the same order.
    Back: sampled elements of Z^alpha must have codes, again order-preserving.
    The comparison runs on the sorted sample, so transitivity of z_compare
    extends consecutive agreement to all pairs.
    """
    alpha = as_ordinal(alpha)
    rng = random.Random(seed)
    prefix = code.elements(sample_size // 2, scan_limit=scan_limit)
    if not prefix:
        raise InconclusiveSample(f"no domain element among the first {scan_limit} codes")
    if code.finite_size is not None and len(prefix) >= code.finite_size:
        codes = sorted(set(prefix))
    else:
        if len(prefix) < sample_size // 2:
            raise InconclusiveSample(f"only {len(prefix)} domain elements below {scan_limit}")
        codes = set(prefix)
        for _ in range(20 * sample_size):
            if len(codes) >= sample_size:
                break
            codes.add(code.sample(rng))
        codes = sorted(codes)

    forth = {}
    for n in codes:
        s = code.decode(n)
        if s.support and not s.support[-1][0] < alpha:
            return False
        forth[n] = s
    if alpha.is_zero():
        back_elems = [ZElement()]
    else:
        back_elems = {sample_zelement(alpha, rng) for _ in range(sample_size)}
        back_elems = sorted(back_elems, key=str)
    back = {}
    for s in back_elems:
        n = code.encode(s)
        if n is None or not code.contains(n):
            return False
        back[n] = s
    for pairs in (forth, back):
        ordered = sorted(pairs, key=functools.cmp_to_key(code.compare))
        for a, b in zip(ordered, ordered[1:]):
            if z_compare(alpha, pairs[a], pairs[b]) >= 0:
                return False
    return True


# ---------------------------------------------------------------------------
# sample-level structure of coded orders


def _search_space(code: OrderCode, bound: int) -> list:
    return code.elements(bound, scan_limit=bound * 64)


def neighbours(code: OrderCode, x: int, space: list) -> tuple:
    """Immediate predecessor and successor of x within ``space`` (None if absent)."""
    below = [y for y in space if code.less(y, x)]
    above = [y for y in space if code.less(x, y)]
    pred = max(below, key=functools.cmp_to_key(code.compare)) if below else None
    succ = min(above, key=functools.cmp_to_key(code.compare)) if above else None
    return pred, succ


def discreteness_report(code: OrderCode, sample_size: int = 100, bound: int | None = None) -> dict:
    """Bounded search: each sampled point has a stable immediate neighbour on both sides."""
    bound = bound or 4 * sample_size + 8
    sample = code.elements(sample_size)
    small, large = _search_space(code, bound), _search_space(code, 2 * bound)
    failures = []
    for x in sample:
        p1, s1 = neighbours(code, x, small)
        p2, s2 = neighbours(code, x, large)
        if p1 is None or s1 is None:
            failures.append((x, "endpoint within search space"))
        elif (p1, s1) != (p2, s2):
            failures.append((x, "neighbour changed when the search space grew"))
    return {"sample": len(sample), "bound": bound, "failures": failures, "discrete": not failures}


def density_report(code: OrderCode, sample_size: int = 60, bound: int | None = None) -> dict:
    """Bounded search: every sampled pair x < y has a search-space point strictly between."""
    bound = bound or 20 * sample_size
    sample = code.elements(sample_size)
    space = _search_space(code, bound)
    ordered = sorted(sample, key=functools.cmp_to_key(code.compare))
    failures = []
    for a, b in zip(ordered, ordered[1:]):
        if not any(code.less(a, z) and code.less(z, b) for z in space):
            failures.append((a, b))
    ends = [x for x in sample if not any(code.less(z, x) for z in space) or not any(code.less(x, z) for z in space)]
    return {"sample": len(sample), "bound": bound, "gaps": failures, "endpoints": ends,
            "dense": not failures and not ends}


def windowed_condensation(code: OrderCode, sample: list, window: int, grow: int = 2) -> list:
    """Estimate condensation classes of ``sample``.

    x ~ y when the number of window points strictly between them does not
    change as the window grows ``grow``-fold.  Returns the classes in order.
    """
    small = _search_space(code, window)
    large = _search_space(code, window * grow)

    def between(space, a, b):
        return sum(1 for z in space if code.less(a, z) and code.less(z, b))

    ordered = sorted(set(sample), key=functools.cmp_to_key(code.compare))
    classes: list = []
    for x in ordered:
        if classes:
            y = classes[-1][-1]
            if between(small, y, x) == between(large, y, x):
                classes[-1].append(x)
                continue
        classes.append([x])
    return classes


def finite_order_type(elements, relation) -> Ordinal:
    """Order type of a finite strict well-order given as a set of pairs."""
    elements = list(elements)
    rel = {tuple(p) for p in relation}
    for a in elements:
        if (a, a) in rel:
            raise NotationError("relation is reflexive somewhere")
        for b in elements:
            if a != b and ((a, b) in rel) == ((b, a) in rel):
                raise NotationError(f"{a} and {b} are not comparable exactly one way")
            for c in elements:
                if (a, b) in rel and (b, c) in rel and (a, c) not in rel:
                    raise NotationError("relation is not transitive")
    return Ordinal.of(len(elements))
