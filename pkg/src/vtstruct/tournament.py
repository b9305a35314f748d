"""Tournaments T_x coding bi-infinite binary words, on finite grid windows.

The vertex (m, n) sits in column m, row n.  Arcs:

* (m, n) -> (m, n') when n > n';
* (m, n) -> (m + 1, n') when x(n' - n) = 1, and the reverse otherwise;
* (m, n) -> (m', n') whenever m' >= m + 2.

The decoder recovers x up to shift from the bare digraph: three-cycles
through v pick out the five columns around v, a handful of set rules split
them into columns, and the arcs from v's column into the next one spell x.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import LabeledDigraph


class WindowError(ValueError):
    """An offset outside what the word can resolve, or a bad window."""


class MarginError(ValueError):
    """The vertex is too close to the window boundary for the decoder."""


class DecodeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class BitWindow:
    """Bits on [lo, hi]; with ``period`` set they extend to all of Z."""

    lo: int
    hi: int
    bits: tuple
    period: int | None = None

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if not self.lo <= 0 <= self.hi:
            raise WindowError(f"window [{self.lo}, {self.hi}] must contain 0")
        if len(bits) != self.hi - self.lo + 1:
            raise WindowError(f"expected {self.hi - self.lo + 1} bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise WindowError("bits must be 0 or 1")
        p = self.period
        if p is not None:
            if p < 1 or len(bits) < p:
                raise WindowError(f"period {p} needs at least {p} bits in the window")
            for i in range(len(bits) - p):
                if bits[i] != bits[i + p]:
                    raise WindowError(f"window bits are not {p}-periodic at index {self.lo + i}")

    @classmethod
    def periodic(cls, word, lo: int = 0) -> "BitWindow":
        """The p-periodic word with x(lo + i) = word[i]; the window is one period containing 0."""
        bits = _bits(word)
        p = len(bits)
        if p == 0:
            raise WindowError("empty word")
        lo_w = -(lo % p) if lo % p else 0
        # store one period starting at lo_w <= 0, so 0 is inside
        per = tuple(bits[(j - lo) % p] for j in range(lo_w, lo_w + p))
        return cls(lo_w, lo_w + p - 1, per, p)

    @classmethod
    def window(cls, word, lo: int = 0) -> "BitWindow":
        bits = _bits(word)
        return cls(lo, lo + len(bits) - 1, bits, None)

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    def resolvable(self, n: int) -> bool:
        return self.period is not None or self.lo <= n <= self.hi

    def __call__(self, n: int) -> int:
        if self.lo <= n <= self.hi:
            return self.bits[n - self.lo]
        if self.period is None:
            raise WindowError(f"x({n}) is outside the window [{self.lo}, {self.hi}]")
        return self.bits[(n - self.lo) % self.period]

    def shifted(self, k: int) -> "BitWindow":
        """The word x' with x'(j) = x(j - k)."""
        if self.period is None:
            lo, hi = self.lo + k, self.hi + k
            if not lo <= 0 <= hi:
                raise WindowError("shifted window no longer contains 0")
            return BitWindow(lo, hi, self.bits)
        return BitWindow.periodic(self.one_period(), lo=k + self.lo)

    def one_period(self) -> tuple:
        if self.period is None:
            raise WindowError("word is not periodic")
        return tuple(self(self.lo + i) for i in range(self.period))

    def as_periodic(self, p: int) -> "BitWindow":
        """Coerce a window to the p-periodic word agreeing with it (checks consistency)."""
        return BitWindow(self.lo, self.hi, self.bits, p)

    def as_window(self) -> "BitWindow":
        return BitWindow(self.lo, self.hi, self.bits)

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "bits": list(self.bits), "period": self.period}

    @classmethod
    def from_json(cls, data: dict) -> "BitWindow":
        return cls(int(data["lo"]), int(data["hi"]), tuple(data["bits"]), data.get("period"))

    def __str__(self):
        s = "".join(map(str, self.bits))
        return f"({s})^Z@{self.lo}" if self.period else f"{s}@{self.lo}"


def _bits(word) -> tuple:
    if isinstance(word, str):
        if set(word) - {"0", "1"}:
            raise WindowError(f"not a bit string: {word!r}")
        return tuple(int(c) for c in word)
    return tuple(int(b) for b in word)


def minimal_period(x: BitWindow) -> int:
    p = x.period
    for d in range(1, p + 1):
        if p % d == 0 and all(x(i) == x(i + d) for i in range(p)):
            return d
    return p


def periodic_words(p: int):
    """All 2^p words of period p (as BitWindows anchored at 0), in binary order."""
    for m in range(2 ** p):
        yield BitWindow.periodic(tuple((m >> (p - 1 - i)) & 1 for i in range(p)))


# ---------------------------------------------------------------------------
# building


def vertex_label(m: int, n: int) -> str:
    return f"({m},{n})"


def arc_direction(x: BitWindow, p: tuple, q: tuple) -> bool:
    """True when the arc between p and q points p -> q."""
    (m, n), (m2, n2) = p, q
    if m == m2:
        return n > n2
    if m2 == m + 1:
        return x(n2 - n) == 1
    if m == m2 + 1:
        return x(n - n2) != 1
    return m2 >= m + 2


@dataclass(frozen=True)
class GridTournament:
    digraph: LabeledDigraph
    source: BitWindow
    coords: dict = field(compare=False)  # label -> (m, n); ground truth only
    m_lo: int | None = None
    m_hi: int | None = None
    n_lo: int | None = None
    n_hi: int | None = None

    def label_of(self, m: int, n: int) -> str:
        return vertex_label(m, n)

    def to_json(self) -> dict:
        return {
            "columns": [self.m_lo, self.m_hi],
            "rows": [self.n_lo, self.n_hi],
            "source": self.source.to_json(),
            "digraph": self.digraph.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GridTournament":
        (m_lo, m_hi), (n_lo, n_hi) = data["columns"], data["rows"]
        d = LabeledDigraph.from_json(data["digraph"])
        coords = {vertex_label(m, n): (m, n) for m in range(m_lo, m_hi + 1) for n in range(n_lo, n_hi + 1)}
        return cls(d, BitWindow.from_json(data["source"]), coords, m_lo, m_hi, n_lo, n_hi)


def build_on_vertices(x: BitWindow, points) -> GridTournament:
    """T_x induced on an arbitrary finite set of grid points."""
    pts = sorted(set(tuple(p) for p in points))
    cols = {m for m, _ in pts}
    rows_by_col: dict = {}
    for m, n in pts:
        rows_by_col.setdefault(m, []).append(n)
    for m in cols:
        if m + 1 in cols:
            for n in rows_by_col[m]:
                for n2 in rows_by_col[m + 1]:
                    if not x.resolvable(n2 - n):
                        raise WindowError(f"arc between columns {m} and {m + 1} needs x({n2 - n}), outside the window")
    arcs = set()
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            a, b = vertex_label(*p), vertex_label(*q)
            arcs.add((a, b) if arc_direction(x, p, q) else (b, a))
    coords = {vertex_label(*p): p for p in pts}
    return GridTournament(LabeledDigraph(tuple(coords), frozenset(arcs)), x, coords)


def build_tournament(x: BitWindow, m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> GridTournament:
    if m_lo > m_hi or n_lo > n_hi:
        raise WindowError("empty window")
    pts = [(m, n) for m in range(m_lo, m_hi + 1) for n in range(n_lo, n_hi + 1)]
    t = build_on_vertices(x, pts)
    return GridTournament(t.digraph, x, t.coords, m_lo, m_hi, n_lo, n_hi)


def is_tournament(d: LabeledDigraph) -> bool:
    """Exactly one arc between every two distinct vertices."""
    n = len(d)
    if len(d.arcs) != n * (n - 1) // 2:
        return False
    return all((v, u) not in d.arcs for u, v in d.arcs)


def left_arc_violations(t: GridTournament) -> list:
    """Arcs pointing to a lower column by more than one step."""
    c = t.coords
    return sorted((u, v) for u, v in t.digraph.arcs if c[v][0] < c[u][0] - 1)


# ---------------------------------------------------------------------------
# genericity


@dataclass
class GenericityReport:
    n_bound: int
    condition_i: dict  # n -> bool
    condition_ii: dict
    truncated: bool

    @property
    def ok(self) -> bool:
        return all(self.condition_i.values()) and all(self.condition_ii.values())

    def failures(self) -> dict:
        return {
            "i": sorted(n for n, v in self.condition_i.items() if not v),
            "ii": sorted(n for n, v in self.condition_ii.items() if not v),
        }

    def to_json(self) -> dict:
        return {"n_bound": self.n_bound, "generic": self.ok, "truncated": self.truncated, "failures": self.failures()}


def check_genericity(x: BitWindow, n_bound: int) -> GenericityReport:
    """Conditions (i) and (ii) for |n| <= n_bound, exactly as stated.

    (i)  n != 0: some k < n has z(k - n) = 1 and z(k) = 0;
    (ii) every n: some k has z(-k) = 0 and z(k - n) = 0.

    Periodic words are searched over one full period of k, which is
    complete.  Windowed words only try k whose offsets are in the window.
    """
    if n_bound < 1:
        raise ValueError("n_bound must be positive")
    z = x
    cond_i, cond_ii = {}, {}
    truncated = False
    for n in range(-n_bound, n_bound + 1):
        if x.period:
            ks_i = range(n - x.period, n)
            ks_ii = range(0, x.period)
        else:
            ks_i = [k for k in range(x.lo + n, n) if x.resolvable(k) and x.resolvable(k - n)]
            ks_ii = [k for k in range(-x.hi, -x.lo + 1) if x.resolvable(-k) and x.resolvable(k - n)]
            truncated = True
        if n != 0:
            cond_i[n] = any(z(k - n) == 1 and z(k) == 0 for k in ks_i)
        cond_ii[n] = any(z(-k) == 0 and z(k - n) == 0 for k in ks_ii)
    return GenericityReport(n_bound, cond_i, cond_ii, truncated)


def _pair_witnessed(x: BitWindow, v: tuple, w: tuple, cols: range, rows: range) -> bool:
    # witness conditions for a three-cycle through v and w, written out from
    # the arc rules case by case; no digraph is consulted
    (c1, a), (c2, b) = v, w
    if c1 > c2 or (c1 == c2 and a < b):
        (c1, a), (c2, b) = (c2, b), (c1, a)
    d = c2 - c1
    if d == 0:
        if c1 + 1 in cols and any(x(k - b) == 1 and x(k - a) == 0 for k in rows):
            return True
        return c1 - 1 in cols and any(x(b - k) == 0 and x(a - k) == 1 for k in rows)
    if d == 1:
        if x(b - a) == 1:
            return any(k > a and x(b - k) == 0 for k in rows) or any(k < b and x(k - a) == 0 for k in rows)
        if any(k < a and x(b - k) == 1 for k in rows) or any(k > b and x(k - a) == 1 for k in rows):
            return True
        # w -> v leftward; the columns either side reach both ends by a long arc
        if c2 + 1 in cols and any(x(k - b) == 0 for k in rows):
            return True
        return c1 - 1 in cols and any(x(a - k) == 0 for k in rows)
    if d == 2:
        return any(x(b - k) == 0 and x(k - a) == 0 for k in rows)
    return False


def check_window_genericity(x: BitWindow, m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> list:
    """Pairs within two columns of each other that lack a three-cycle witness in the window.

    An empty list means every S_v in the window is exactly the five-column
    neighbourhood of v cut down to the window.
    """
    cols, rows = range(m_lo, m_hi + 1), range(n_lo, n_hi + 1)
    missing = []
    pts = [(m, n) for m in cols for n in rows]
    for i, v in enumerate(pts):
        for w in pts[i + 1:]:
            if abs(w[0] - v[0]) <= 2 and not _pair_witnessed(x, v, w, cols, rows):
                missing.append((v, w))
    return missing


# ---------------------------------------------------------------------------
# decoding (arcs only)


def _digraph(t) -> LabeledDigraph:
    return t.digraph if isinstance(t, GridTournament) else t


def three_cycle_set(t, v) -> frozenset:
    """Vertices lying on a directed three-cycle together with v."""
    d = _digraph(t)
    out, inn = d.out, d.inn
    s = {w for w in out[v] if out[w] & inn[v]}
    s |= {w for w in inn[v] if inn[w] & out[v]}
    return frozenset(s)


class _Decoder:
    """Memoised column rules on one digraph.

    Candidates for every rule are restricted to vertices that are neither
    the top nor the bottom of their own column; boundary rows lack some of
    the arcs the rules rely on.
    """

    def __init__(self, d: LabeledDigraph):
        self.d = d
        self._s: dict = {}
        self._c: dict = {}

    def S(self, v) -> frozenset:
        if v not in self._s:
            self._s[v] = three_cycle_set(self.d, v) | {v}
        return self._s[v]

    def C0_full(self, v) -> frozenset:
        key = ("full", v)
        if key not in self._c:
            sv = self.S(v)
            self._c[key] = frozenset(w for w in sv if self.S(w) == sv)
        return self._c[key]

    def interior(self, v) -> bool:
        col = self.C0_full(v)
        out = self.d.out[v] & col
        return 0 < len(out) < len(col) - 1

    def cand(self, v) -> list:
        return [w for w in self.S(v) if self.interior(w)]

    def C(self, i: int, v) -> frozenset:
        key = (i, v)
        if key in self._c:
            return self._c[key]
        if i == 0:
            res = frozenset(w for w in self.C0_full(v) if self.interior(w))
        elif i == -2:
            res = frozenset(w for w in self.cand(v) if not (self.d.out[v] & self.C0_full(w)))
        elif i == 2:
            res = frozenset(w for w in self.cand(v) if v in self.C(-2, w))
        elif i == -1:
            c2, c_2 = self.C(2, v), self.C(-2, v)
            res = frozenset(w for w in self.cand(v) if w not in c_2 and not (c2 & self.S(w)))
        elif i == 1:
            res = frozenset(w for w in self.cand(v) if v in self.C(-1, w))
        else:
            raise ValueError(i)
        self._c[key] = res
        return res


def _column_rank(d: LabeledDigraph, column) -> dict:
    """Position along the column: w sits above every vertex it points to."""
    col = frozenset(column)
    ranks = {w: len(d.out[w] & col) for w in col}
    if sorted(ranks.values()) != list(range(len(col))):
        raise DecodeError("arcs within the column are not a linear order")
    return ranks


def identify_columns(t, v, margin_columns: int = 3) -> dict:
    """The five sets C_{-2..2, v}, each cut down to non-boundary rows.

    For a GridTournament the precondition on v's position is checked
    against the window geometry (``margin_columns`` on each side, and not in
    the top or bottom row).  The rules themselves only look at arcs.
    """
    if isinstance(t, GridTournament) and t.m_lo is not None:
        m, n = t.coords[v]
        if m - t.m_lo < margin_columns or t.m_hi - m < margin_columns or n in (t.n_lo, t.n_hi):
            raise MarginError(
                f"{v} needs {margin_columns} columns on each side and must not be in a boundary row "
                f"of the window columns [{t.m_lo}, {t.m_hi}], rows [{t.n_lo}, {t.n_hi}]"
            )
    dec = _Decoder(_digraph(t))
    if not dec.interior(v):
        raise MarginError(f"{v} is at the top or bottom of its column")
    cols = {i: dec.C(i, v) for i in (-2, -1, 0, 1, 2)}
    seen: set = set()
    for i, c in cols.items():
        if not c:
            raise MarginError(f"column {i} relative to {v} came out empty")
        if seen & c:
            raise DecodeError("column sets overlap")
        seen |= c
    return cols


@dataclass(frozen=True)
class ShiftClass:
    representative: BitWindow
    window_limited: bool = True

    def to_json(self) -> dict:
        return {"representative": self.representative.to_json(), "window_limited": self.window_limited}


def decode(t, v, min_length: int = 2) -> ShiftClass:
    """Read x up to shift from the arcs between v and the column to its right.

    Bit j is 1 when v points to the j-th vertex of C_{1,v}, counting upward.
    """
    d = _digraph(t)
    cols = identify_columns(t, v)
    c1 = cols[1]
    if len(c1) < min_length:
        raise DecodeError(f"only {len(c1)} positions covered, need {min_length}")
    rank = _column_rank(d, c1)
    bits = [0] * len(c1)
    for w, j in rank.items():
        bits[j] = 1 if d.has_arc(v, w) else 0
    return ShiftClass(BitWindow(0, len(bits) - 1, tuple(bits)))


def decode_column(t, v) -> ShiftClass:
    """Like :func:`decode`, but reads every vertex of v's column against C_{1,v}.

    With h rows on each side this recovers 2h - 1 consecutive offsets
    instead of h, and cross-checks every repeated offset.
    """
    d = _digraph(t)
    cols = identify_columns(t, v)
    r0 = _column_rank(d, cols[0])
    r1 = _column_rank(d, cols[1])
    h0, h1 = len(r0), len(r1)
    if h0 != h1:
        raise DecodeError("columns of different heights")
    h = h0
    got: dict = {}
    for a, i in r0.items():
        for b, j in r1.items():
            bit = 1 if d.has_arc(a, b) else 0
            if got.setdefault(j - i, bit) != bit:
                raise DecodeError(f"offset {j - i} read inconsistently")
    return ShiftClass(BitWindow(-(h - 1), h - 1, tuple(got[k] for k in range(-(h - 1), h))))


# ---------------------------------------------------------------------------
# shift equivalence


@dataclass(frozen=True)
class ShiftVerdict:
    equivalent: bool
    k: int | None
    window_limited: bool


def shift_witness(a: BitWindow, b: BitWindow, coerce: bool = False) -> ShiftVerdict:
    """Find k with a(n + k) = b(n) for all n.

    Periodic pairs are decided exactly.  Windowed pairs count as equivalent
    when the shorter window occurs inside the longer one; the verdict is
    flagged window-limited.  Mixed pairs need ``coerce=True``, which
    compares the periodic one as the window it stores.
    """
    if a.is_periodic != b.is_periodic:
        if not coerce:
            raise WindowError("cannot compare a periodic word with a windowed one without coercion")
        a, b = a.as_window(), b.as_window()
    if a.is_periodic:
        L = math.lcm(a.period, b.period)
        for k in range(a.period):
            if all(a(n + k) == b(n) for n in range(L)):
                return ShiftVerdict(True, k, False)
        return ShiftVerdict(False, None, False)
    short, long_, flip = (a, b, True) if len(a.bits) <= len(b.bits) else (b, a, False)
    la = len(short.bits)
    for off in range(len(long_.bits) - la + 1):
        if long_.bits[off:off + la] == short.bits:
            # short(lo_s + i) == long(lo_l + off + i)
            k = (long_.lo + off) - short.lo
            return ShiftVerdict(True, -k if flip else k, True)
    return ShiftVerdict(False, None, True)


def shift_equivalent(a: BitWindow, b: BitWindow, coerce: bool = False) -> bool:
    return shift_witness(a, b, coerce).equivalent


# ---------------------------------------------------------------------------
# ground-truth checks (coordinates allowed)


def translation_check(t: GridTournament, dm: int, dn: int) -> bool:
    """Translation by (dm, dn) maps arcs to arcs wherever both ends stay in the window."""
    pos = {p: lab for lab, p in t.coords.items()}
    pairs = [(p, (p[0] + dm, p[1] + dn)) for p in pos if (p[0] + dm, p[1] + dn) in pos]
    if not pairs:
        raise WindowError("translated window does not overlap the original")
    d = t.digraph
    for i, (p, p2) in enumerate(pairs):
        for q, q2 in pairs[i + 1:]:
            if d.has_arc(pos[p], pos[q]) != d.has_arc(pos[p2], pos[q2]):
                return False
    return True


def phi_isomorphism_check(x: BitWindow, k: int, m_lo: int, m_hi: int, n_lo: int, n_hi: int,
                          phi_k: int | None = None) -> bool:
    """phi(m, n) = (m, n + k m) carries T_x onto T_x' with x'(j) = x(j - k).

    ``phi_k`` overrides the k used in phi while x' still uses k, which is
    how a wrong shift is tested.
    """
    if not x.is_periodic:
        raise WindowError("phi check needs a periodic word")
    if m_lo > m_hi or n_lo > n_hi:
        raise WindowError("empty window")
    kk = k if phi_k is None else phi_k
    src = build_tournament(x, m_lo, m_hi, n_lo, n_hi)
    phi = {lab: (m, n + kk * m) for lab, (m, n) in src.coords.items()}
    img = build_on_vertices(x.shifted(k), phi.values())
    lab2 = {p: lab for lab, p in img.coords.items()}
    mapping = {lab: lab2[p] for lab, p in phi.items()}
    ds, di = src.digraph, img.digraph
    return all(di.has_arc(mapping[u], mapping[v]) for u, v in ds.arcs)
