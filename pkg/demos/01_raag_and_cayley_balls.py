"""Word problem in right-angled Artin groups, and balls of their Cayley digraphs.

Run with ``python3 demos/01_raag_and_cayley_balls.py``.
"""
from vtstruct.cayley import cayley_ball, check_acyclic, check_local_transitivity, minimal_distinguishing_radius
from vtstruct.raag import CommutationGraph, label, normal_form, parse_word, words_equal

# %% Three generators; a0 commutes with a1 and nothing else.
g = CommutationGraph.from_edges(3, [(0, 1)])
w = parse_word("a1 a2 a0 a2^-1 a1^-1 a0")
print("normal form of", label(w), "is", label(normal_form(g, w)))
print("a0 a1 = a1 a0 ?", words_equal(g, parse_word("a0 a1"), parse_word("a1 a0")))
print("a0 a2 = a2 a0 ?", words_equal(g, parse_word("a0 a2"), parse_word("a2 a0")))

# %% Ball growth: at radius 2 over three generators the size is 37 - 4e.
for edges in ([], [(0, 1)], [(0, 1), (1, 2)], [(0, 1), (0, 2), (1, 2)]):
    b = cayley_ball(CommutationGraph.from_edges(3, edges), 2)
    print(f"{len(edges)} edges: {len(b.digraph)} vertices, {len(b.digraph.arcs)} arcs")

# %% Arcs raise the exponent sum by one, so balls have no directed cycles,
# and the neighbourhood of every inner vertex looks like the identity's.
b = cayley_ball(g, 3)
print("acyclic and graded:", check_acyclic(b))
print("locally transitive at radius 1:", check_local_transitivity(b, 1))

# %% Free group on two letters versus Z^2: balls already differ at radius 2.
print("distinguishing radius:", minimal_distinguishing_radius(CommutationGraph.from_edges(2, []),
                                                              CommutationGraph.from_edges(2, [(0, 1)])))
