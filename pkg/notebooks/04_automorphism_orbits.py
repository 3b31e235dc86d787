"""
Automorphism orbits
===================

Miller's product formula counts the Aut(G)-orbits of a p-group. The search
oracle finds an explicit automorphism for every merge, so the two can be
compared directly on small groups.
"""

from annigraph import build_graph
from annigraph.graph import twin_orbits
from annigraph.orbits import (PartitionType, bruteforce_aut_orbits, miller_orbit_count,
                              orbit_report, partitions_within)

for lam in partitions_within(2, 32):
    print(orbit_report(lam, 2))

t = PartitionType((2, 1), 2)
res = bruteforce_aut_orbits(t.group())
print([sorted(o) for o in res.orbits], miller_orbit_count(t))

# in Z/4 the graph cannot tell 2 apart from the units, but Aut(G) can
from annigraph import cyclic
G = cyclic(4)
print(twin_orbits(build_graph(G)), [sorted(o) for o in bruteforce_aut_orbits(G).orbits])
