"""Transitive closure of acyclic digraphs and recovery of the covering arcs."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley import is_acyclic
from .core import LabeledDigraph


class CyclicInput(ValueError):
    """The closure of a digraph with a directed cycle is not a partial order."""


@dataclass(frozen=True)
class ClosedDigraph:
    digraph: LabeledDigraph
    provenance: object = None

    def less(self, x, y) -> bool:
        return self.digraph.has_arc(x, y)


def adjacency(d: LabeledDigraph) -> np.ndarray:
    idx = {v: i for i, v in enumerate(d.vertices)}
    a = np.zeros((len(d), len(d)), dtype=bool)
    for u, v in d.arcs:
        a[idx[u], idx[v]] = True
    return a


def _from_matrix(d: LabeledDigraph, m: np.ndarray) -> LabeledDigraph:
    verts = d.vertices
    rows, cols = np.nonzero(m)
    return LabeledDigraph(verts, frozenset((verts[i], verts[j]) for i, j in zip(rows, cols)))


def _compose(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return (x.astype(np.int64) @ y.astype(np.int64)) > 0


def transitive_closure(d: LabeledDigraph, provenance=None) -> ClosedDigraph:
    if not is_acyclic(d):
        raise CyclicInput("digraph has a directed cycle; its transitive closure is not a partial order")
    a = adjacency(d)
    reach = a.copy()
    while True:
        nxt = reach | _compose(reach, a)
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    return ClosedDigraph(_from_matrix(d, reach), provenance)


def recover_generator_arcs(p: ClosedDigraph | LabeledDigraph) -> LabeledDigraph:
    """Keep x -> y only when no z has x -> z -> y (the covering relation)."""
    d = p.digraph if isinstance(p, ClosedDigraph) else p
    a = adjacency(d)
    return _from_matrix(d, a & ~_compose(a, a))


def is_strict_partial_order(d: LabeledDigraph) -> bool:
    a = adjacency(d)
    if a.diagonal().any():
        return False
    if (a & a.T).any():
        return False
    return not (_compose(a, a) & ~a).any()
