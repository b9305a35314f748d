"""Finite graphs and digraphs, plus the exhaustive isomorphism oracle.

Everything else in the package is checked against :func:`are_isomorphic`
and :func:`graph_isomorphic`, so they favour obviousness over speed.
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

DEFAULT_ISO_CAP = 12
DEFAULT_GRAPH_CAP = 8


class OracleTooLarge(ValueError):
    """Raised instead of starting an exhaustive search that would not finish."""


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(itertools.combinations(range(n), 2)))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def to_json(self) -> dict:
        return {"n": self.n, "edges": sorted([list(e) for e in self.edges])}

    @classmethod
    def from_json(cls, data: dict) -> "SimpleGraph":
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def all_graphs(n: int):
    """Every labelled simple graph on vertices 0..n-1."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


@dataclass(frozen=True)
class LabeledDigraph:
    """Finite digraph on string labels.

    ``oriented`` forbids 2-cycles, matching the convention that a directed
    graph is an oriented simple graph.
    """

    vertices: tuple
    arcs: frozenset = frozenset()
    oriented: bool = True
    _out: dict = field(default=None, init=False, repr=False, compare=False)
    _in: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", frozenset((u, v) for u, v in self.arcs))
        vset = set(verts)
        if len(vset) != len(verts):
            raise ValueError("duplicate vertex labels")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-arc at {u!r}")
            if u not in vset or v not in vset:
                raise ValueError(f"arc ({u!r}, {v!r}) leaves the vertex set")
            if self.oriented and (v, u) in self.arcs:
                raise ValueError(f"both ({u!r}, {v!r}) and its reverse present in an oriented digraph")

    @property
    def out(self) -> dict:
        if self._out is None:
            out = {v: set() for v in self.vertices}
            for u, v in self.arcs:
                out[u].add(v)
            object.__setattr__(self, "_out", {k: frozenset(s) for k, s in out.items()})
        return self._out

    @property
    def inn(self) -> dict:
        if self._in is None:
            inn = {v: set() for v in self.vertices}
            for u, v in self.arcs:
                inn[v].add(u)
            object.__setattr__(self, "_in", {k: frozenset(s) for k, s in inn.items()})
        return self._in

    def has_arc(self, u, v) -> bool:
        return (u, v) in self.arcs

    def __len__(self):
        return len(self.vertices)

    def induced(self, keep: Iterable) -> "LabeledDigraph":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return LabeledDigraph(verts, frozenset(a for a in self.arcs if a[0] in keep and a[1] in keep), self.oriented)

    def relabel(self, mapping: dict) -> "LabeledDigraph":
        return LabeledDigraph(
            tuple(mapping[v] for v in self.vertices),
            frozenset((mapping[u], mapping[v]) for u, v in self.arcs),
            self.oriented,
        )

    def with_arcs(self, arcs: Iterable, oriented: bool | None = None) -> "LabeledDigraph":
        return LabeledDigraph(self.vertices, frozenset(arcs), self.oriented if oriented is None else oriented)

    def to_json(self) -> dict:
        order = {v: i for i, v in enumerate(self.vertices)}
        arcs = sorted(self.arcs, key=lambda a: (order[a[0]], order[a[1]]))
        return {"vertices": list(self.vertices), "arcs": [list(a) for a in arcs]}

    @classmethod
    def from_json(cls, data: dict, oriented: bool = True) -> "LabeledDigraph":
        return cls(tuple(data["vertices"]), frozenset(tuple(a) for a in data["arcs"]), oriented)

    def to_dot(self, name: str = "G") -> str:
        def q(s):
            return json.dumps(str(s))

        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f"  {q(v)};")
        for u, v in self.to_json()["arcs"]:
            lines.append(f"  {q(u)} -> {q(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class IsoWitness:
    mapping: dict

    def inverse(self) -> "IsoWitness":
        return IsoWitness({v: k for k, v in self.mapping.items()})

    def then(self, other: "IsoWitness") -> "IsoWitness":
        return IsoWitness({k: other.mapping[v] for k, v in self.mapping.items()})


def verify_witness(a: LabeledDigraph, b: LabeledDigraph, mapping: dict) -> bool:
    """Check, from scratch, that ``mapping`` is an isomorphism a -> b."""
    if set(mapping) != set(a.vertices) or set(mapping.values()) != set(b.vertices):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    for u in a.vertices:
        for v in a.vertices:
            if u != v and a.has_arc(u, v) != b.has_arc(mapping[u], mapping[v]):
                return False
    return True


def _degree_key(d: LabeledDigraph, v):
    return (len(d.out[v]), len(d.inn[v]))


def are_isomorphic(a: LabeledDigraph, b: LabeledDigraph, cap: int = DEFAULT_ISO_CAP) -> IsoWitness | None:
    """Exhaustive search for an arc-preserving bijection a -> b.

    Vertices of ``a`` are placed in a fixed order (breadth-first from the
    rarest degree class) and each is tried against the candidates of ``b``
    in their listed order, so the returned witness is deterministic.
    """
    if len(a) > cap or len(b) > cap:
        raise OracleTooLarge(f"isomorphism oracle capped at {cap} vertices (got {len(a)} and {len(b)})")
    if len(a) != len(b) or len(a.arcs) != len(b.arcs):
        return None
    classes_a = defaultdict(list)
    classes_b = defaultdict(list)
    for v in a.vertices:
        classes_a[_degree_key(a, v)].append(v)
    for v in b.vertices:
        classes_b[_degree_key(b, v)].append(v)
    if {k: len(v) for k, v in classes_a.items()} != {k: len(v) for k, v in classes_b.items()}:
        return None
    if not a.vertices:
        return IsoWitness({})

    order = _search_order(a, classes_a)
    mapping: dict = {}
    used: set = set()

    def consistent(u, x) -> bool:
        for w, y in mapping.items():
            if a.has_arc(u, w) != b.has_arc(x, y) or a.has_arc(w, u) != b.has_arc(y, x):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for x in classes_b[_degree_key(a, u)]:
            if x in used or not consistent(u, x):
                continue
            mapping[u] = x
            used.add(x)
            if extend(i + 1):
                return True
            del mapping[u]
            used.discard(x)
        return False

    if extend(0):
        return IsoWitness(dict(mapping))
    return None


def _search_order(a: LabeledDigraph, classes: dict) -> list:
    # start from the smallest degree class, then grow along arcs so that
    # each new vertex is constrained by already-placed neighbours
    index = {v: i for i, v in enumerate(a.vertices)}
    seen: set = set()
    order: list = []
    starts = sorted(a.vertices, key=lambda v: (len(classes[_degree_key(a, v)]), index[v]))
    for s in starts:
        if s in seen:
            continue
        frontier = [s]
        seen.add(s)
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            nbrs = sorted(a.out[v] | a.inn[v], key=index.__getitem__)
            for w in nbrs:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return order


def graph_isomorphic(a: SimpleGraph, b: SimpleGraph, cap: int = DEFAULT_GRAPH_CAP) -> bool:
    """Plain permutation search over all n! bijections."""
    if a.n > cap or b.n > cap:
        raise OracleTooLarge(f"graph oracle capped at {cap} vertices")
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    for perm in itertools.permutations(range(a.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in b.edges for u, v in a.edges):
            return True
    return False


def digraph_from_json_text(text: str) -> LabeledDigraph:
    return LabeledDigraph.from_json(json.loads(text))
