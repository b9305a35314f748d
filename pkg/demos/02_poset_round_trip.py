"""From a Cayley digraph to its transitive closure and back."""
from vtstruct.cayley import cayley_ball
from vtstruct.poset import is_strict_partial_order, recover_generator_arcs, transitive_closure
from vtstruct.raag import CommutationGraph

g = CommutationGraph.from_edges(2, [(0, 1)])  # Z^2
ball = cayley_ball(g, 2)
closure = transitive_closure(ball.digraph)
print("ball arcs:", len(ball.digraph.arcs), " closure arcs:", len(closure.digraph.arcs))
print("closure is a strict partial order:", is_strict_partial_order(closure.digraph))

# %% Generator arcs are exactly the covering pairs of the order.
recovered = recover_generator_arcs(closure)
print("recovered arcs equal the originals:", recovered.arcs == ball.digraph.arcs)

# %% DOT output, for graphviz.
print(recovered.to_dot("Z2_ball")[:200], "...")
