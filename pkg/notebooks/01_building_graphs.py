"""
Annihilator graphs of small abelian groups
==========================================

Each element a of G has annihilator [a:G] = {r in Z : rG is killed by a}, an
ideal dZ with d dividing exp(G). Two elements are adjacent when their
annihilators multiply into a subideal of exp(G)Z.
"""

from annigraph import build_graph, cyclic, make_group
from annigraph.formats import to_graph6
from annigraph.graph import metrics, twin_orbits
from annigraph.groups import annihilator

# Z/8Z, the standard first example
G = cyclic(8)
g = build_graph(G)
print(g.dense())
for a in range(G.order):
    print(a, annihilator(G, a).generator, sorted(g.neighbors(a)))

# zero is adjacent to everything, so the graph is connected with diameter <= 2
print(metrics(g))

# vertices with identical neighbourhoods: here these are the valuation classes
print(twin_orbits(g))

# a non-cyclic group; coordinates label the vertices
H = make_group([2, 4])
h = build_graph(H)
print([h.vertex_label(v) for v in range(h.n)])
print(h.num_edges, "edges,", to_graph6(h))
