"""
Adjacency spectrum and energy
=============================

Most of the spectrum sits at 0 and -1. What is left is the spectrum of the
small quotient matrix over the valuation classes.
"""

import numpy as np

from annigraph import build_graph, cyclic
from annigraph.graph import quotient
from annigraph.polynomials import charpoly
from annigraph.spectra import (adjacency_mult_closed_form, adjacency_spectrum, classify_energy,
                               quotient_roots, residual_eigenvalues, verify_thm6)

p, a = 3, 4
g = build_graph(cyclic(p**a))
spec = adjacency_spectrum(g)
m = adjacency_mult_closed_form(p, a)
print("zero cluster", spec.count_near(0.0), "expected", m.mult_0)
print("-1 cluster", spec.count_near(-1.0), "expected", m.mult_neg1)

q = quotient(cyclic(p**a))
print(q.M)
f, roots = quotient_roots(p, a)
print(f)
rest = residual_eigenvalues(spec.eigenvalues, m.mult_0, m.mult_neg1)
print(np.round(rest, 8), np.round(roots, 8))

# exact characteristic polynomial for a small case
print(charpoly(build_graph(cyclic(9)).dense()))

# energy: never hyperenergetic, always hypoenergetic for a >= 2 so far
for n in [4, 8, 9, 25, 27, 49, 125]:
    c = classify_energy(build_graph(cyclic(n)))
    print(n, round(c.E, 4), c.verdict)

r = verify_thm6(7)
print(r.E_gamma, r.E_threshold_G, r.E_complete, r.notes)
