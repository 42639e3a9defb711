"""
Partitions in a box
===================

"""

import math

from colocal import YoungLattice, to_dot
from colocal.lattice import hasse_edges

Y = YoungLattice(3, 3)
print(Y.size, math.comb(6, 3))
print(" ".join(str(p) for p in Y.elements()))

edges = hasse_edges(Y)
print(len(edges), "cover relations")
print([f"{a} < {b}" for a, b in edges[:4]])

# join is the union of diagrams, meet the intersection
a, b = Y.elements()[5], Y.elements()[7]
print(a, b, Y.join(a, b), Y.meet(a, b))

print(to_dot(YoungLattice(2, 1))[:200])
