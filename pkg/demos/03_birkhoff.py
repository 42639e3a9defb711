"""
Distributive lattices from their join-irreducibles
===================================================

"""

from colocal import (are_isomorphic, downset_lattice, is_distributive, is_frame,
                     join_irreducibles)
from colocal.lattice import FinitePoset, diamond_m3, pentagon_n5

# a 2+2 poset: two incomparable chains
P = FinitePoset.from_relations(["a1", "a2", "b1", "b2"], [("a1", "a2"), ("b1", "b2")])
L = downset_lattice(P)
print("down-sets:", L.size)

# Birkhoff: J(O(P)) is P again, so the round trip is an isomorphism
J = join_irreducibles(L)
print("join-irreducibles:", J.names)
print("round trip:", are_isomorphic(L, downset_lattice(J)) is not None)

# distributive exactly when frame; M3 and N5 are the usual obstructions
for name, K in (("O(P)", L), ("M3", diamond_m3()), ("N5", pentagon_n5())):
    print(name, is_distributive(K)[0], is_frame(K))
