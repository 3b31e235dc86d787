"""
Threshold structure of the cyclic case
======================================

For Z/p^a the graph has no alternating 4-cycle. So it is a threshold graph,
built one vertex at a time as isolated (0) or dominating (1).
"""

from annigraph import build_graph, cyclic
from annigraph.threshold import (closed_form_creation_sequence, find_alternating_4cycle,
                                 laplacian_multiplicity_table, laplacian_spectrum_threshold,
                                 peel_creation_sequence)

for p, a in [(2, 4), (3, 3), (5, 2)]:
    g = build_graph(cyclic(p**a))
    word = peel_creation_sequence(g)
    print(f"Z/{p}^{a}", find_alternating_4cycle(g), word, word == closed_form_creation_sequence(p, a))

# Laplacian eigenvalues are the conjugate of the degree partition
g = build_graph(cyclic(16))
print(laplacian_spectrum_threshold(g))
print(laplacian_multiplicity_table(2, 4))

# non-cyclic groups need not be threshold
from annigraph import make_group
w = find_alternating_4cycle(build_graph(make_group([6, 10])))
print("Z/6 + Z/10 witness:", w)
