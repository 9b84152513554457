"""
Rainbow connection by ideal membership
======================================

For a graph of diameter at most 2, multiply the path polynomials of all
vertex pairs and reduce the product by the triple-product basis. A zero
remainder means no 2-coloring is rainbow connecting.
"""

import itertools

from rainbowalg import generate, graph_polynomial, path_polynomial, rc2_membership, triple_basis
from rainbowalg.poly import MonomialOrder
from rainbowalg.oracle import rainbow_connected

###############################################################################
# The basis for three edge variables has a single element.

print(triple_basis(3)[0])

###############################################################################
# The 4-cycle: each diagonal is reached by two 2-edge paths.

c4 = generate("cycle", 4)
print("P_13 =", path_polynomial(c4, 1, 3))
f = graph_polynomial(c4)
print("f_G has", len(f), "terms of degree", f.degree)

for kind in ("lex", "grlex", "grevlex"):
    v = rc2_membership(c4, MonomialOrder(kind))
    print(f"{kind:8s} -> {v.decision} ({len(v.remainder)} remainder terms)")

###############################################################################
# A nonzero value of f_G at a 0/1 point is a rainbow-connecting coloring.

for point in itertools.product((0, 1), repeat=c4.m):
    if f.evaluate(point) != 0:
        print("coloring", point, "rainbow connected:", rainbow_connected(c4, point, 2))
        break

###############################################################################
# The star K_{1,3}: f_G is the square of the basis element.

star = generate("star", 3)
print(graph_polynomial(star) == triple_basis(3)[0] ** 2, rc2_membership(star).decision)
