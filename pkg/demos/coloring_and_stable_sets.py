"""
Vertex coloring and stable sets
===============================

The two classical encodings: roots of unity for k-coloring and 0/1
points for stable sets of a given size.
"""

from rainbowalg import GF, encode_stable_set, encode_vertex_coloring, generate, search_certificate
from rainbowalg.oracle import count_solutions, stable_set_count

###############################################################################
# An odd cycle is not 2-colorable; certificate search proves it.

c5 = generate("cycle", 5)
system = encode_vertex_coloring(c5, 2, GF(3))
out = search_certificate(system)
print(out.kind, "of degree", out.certificate.degree, "within cap", out.degree_cap)
for f, h in zip(system, out.certificate.cofactors):
    if h:
        print(f"  ({h}) * ({f})")

###############################################################################
# Three colors suffice: the search finds a witness instead.

print(search_certificate(encode_vertex_coloring(c5, 3), witness_search=True).kind)

###############################################################################
# Stable sets: solutions of the system are exactly the stable sets.

for k in range(1, 4):
    s = encode_stable_set(c5, k)
    print(f"k={k}: {count_solutions(s, [0, 1])} solutions, {stable_set_count(c5, k)} stable sets")
