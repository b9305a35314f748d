import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vtstruct.core import (
    LabeledDigraph,
    OracleTooLarge,
    SimpleGraph,
    all_graphs,
    are_isomorphic,
    digraph_from_json_text,
    graph_isomorphic,
    verify_witness,
)

from conftest import digraph

CYCLE3 = digraph([("a", "b"), ("b", "c"), ("c", "a")])
PATH3 = digraph([("a", "b"), ("b", "c")])


def test_simple_graph_normalizes_and_validates():
    g = SimpleGraph.from_edges(3, [(1, 0), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.adjacent(1, 0) and not g.adjacent(0, 2)
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(0, 2)])
    assert SimpleGraph.from_json(g.to_json()) == g


def test_all_graphs_counts():
    assert [len(list(all_graphs(n))) for n in range(1, 5)] == [1, 2, 8, 64]


def test_digraph_invariants():
    with pytest.raises(ValueError):
        digraph([("a", "a")])
    with pytest.raises(ValueError):
        digraph([("a", "b"), ("b", "a")])
    # allowed once the digraph is not flagged oriented
    d = digraph([("a", "b"), ("b", "a")], oriented=False)
    assert d.has_arc("b", "a")
    with pytest.raises(ValueError):
        LabeledDigraph(("a", "a"), frozenset())
    with pytest.raises(ValueError):
        LabeledDigraph(("a",), frozenset({("a", "z")}))


def test_json_and_dot_roundtrip():
    d = CYCLE3
    assert digraph_from_json_text(__import__("json").dumps(d.to_json())) == d
    dot = d.to_dot()
    assert dot.startswith("digraph G {")
    assert '"a" -> "b";' in dot and '"c" -> "a";' in dot


def test_cycle_vs_path():
    assert are_isomorphic(CYCLE3, PATH3) is None


def test_identity_witness():
    w = are_isomorphic(CYCLE3, CYCLE3)
    assert w.mapping == {"a": "a", "b": "b", "c": "c"}


def test_cycle_vs_relabelling_all_bijections():
    # every relabelling of a directed 3-cycle is matched, and the
    # witness agrees with a brute-force check of all 6 bijections
    for perm in itertools.permutations("xyz"):
        m = dict(zip("abc", perm))
        other = CYCLE3.relabel(m)
        w = are_isomorphic(CYCLE3, other)
        assert w is not None and verify_witness(CYCLE3, other, w.mapping)
        brute = [p for p in itertools.permutations(other.vertices)
                 if verify_witness(CYCLE3, other, dict(zip(CYCLE3.vertices, p)))]
        assert len(brute) == 3  # the rotations


def test_oracle_cap():
    big = LabeledDigraph(tuple(str(i) for i in range(13)), frozenset())
    with pytest.raises(OracleTooLarge):
        are_isomorphic(big, big)
    assert are_isomorphic(big, big, cap=13) is not None


def test_graph_isomorphic_examples():
    k3 = SimpleGraph.complete(3)
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    one_edge = SimpleGraph.from_edges(3, [(0, 2)])
    assert not graph_isomorphic(k3, path)
    assert graph_isomorphic(SimpleGraph.empty(4), SimpleGraph.empty(4))
    assert not graph_isomorphic(path, one_edge)
    assert graph_isomorphic(path, SimpleGraph.from_edges(3, [(0, 2), (2, 1)]))
    with pytest.raises(OracleTooLarge):
        graph_isomorphic(SimpleGraph.empty(9), SimpleGraph.empty(9))


def test_graph_isomorphism_classes_on_three_vertices():
    gs = list(all_graphs(3))
    classes = []
    for g in gs:
        for c in classes:
            if graph_isomorphic(g, c[0]):
                c.append(g)
                break
        else:
            classes.append([g])
    assert sorted(len(c) for c in classes) == [1, 1, 3, 3]


@st.composite
def digraphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    verts = [f"v{i}" for i in range(n)]
    arcs = set()
    for i, j in itertools.combinations(range(n), 2):
        c = draw(st.integers(0, 2))
        if c == 1:
            arcs.add((verts[i], verts[j]))
        elif c == 2:
            arcs.add((verts[j], verts[i]))
    return LabeledDigraph(tuple(verts), frozenset(arcs))


@settings(max_examples=60, deadline=None)
@given(digraphs(), st.randoms(use_true_random=False))
def test_isomorphism_is_an_equivalence(d, rnd):
    perm = list(d.vertices)
    rnd.shuffle(perm)
    e = d.relabel({v: "w" + p for v, p in zip(d.vertices, perm)})
    perm2 = list(e.vertices)
    rnd.shuffle(perm2)
    f = e.relabel(dict(zip(e.vertices, ["u" + p for p in perm2])))
    wde = are_isomorphic(d, e)
    wef = are_isomorphic(e, f)
    assert wde and wef
    assert verify_witness(d, e, wde.mapping)
    assert verify_witness(e, d, wde.inverse().mapping)
    assert verify_witness(d, f, wde.then(wef).mapping)
    assert are_isomorphic(d, d).mapping == {v: v for v in d.vertices}


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=5), digraphs(max_n=5))
def test_isomorphism_matches_brute_force(a, b):
    got = are_isomorphic(a, b)
    brute = len(a) == len(b) and any(
        verify_witness(a, b, dict(zip(a.vertices, p))) for p in itertools.permutations(b.vertices)
    )
    assert (got is not None) == brute
    if got:
        assert verify_witness(a, b, got.mapping)


def test_isomorphism_is_deterministic():
    rng = random.Random(5)
    verts = tuple(str(i) for i in range(7))
    arcs = frozenset((a, b) for a, b in itertools.combinations(verts, 2) if rng.random() < 0.5)
    d = LabeledDigraph(verts, arcs)
    assert are_isomorphic(d, d).mapping == are_isomorphic(d, d).mapping
