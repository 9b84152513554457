"""
Rainbow connection with k colors
================================

Colors become k-th roots of unity in GF(p), with p the smallest prime
that is 1 mod k and exceeds k(k-1)/2. A point of the system is a
rainbow-connecting coloring.
"""

from rainbowalg import encode_rck, field_for_k, generate
from rainbowalg.oracle import rainbow_connected, rc_at_most, solve_bruteforce
from rainbowalg.poly import roots_of_unity

for k in (2, 3, 4):
    print(f"k={k}: GF({field_for_k(k)})")

###############################################################################
# The 5-cycle needs three colors.

c5 = generate("cycle", 5)
for k in (2, 3):
    system = encode_rck(c5, k)
    p = system.field.char
    roots = roots_of_unity(p, k)
    point = solve_bruteforce(system, roots)
    print(f"k={k} over GF({p}): {len(system)} equations, max degree {system.max_degree}")
    if point is None:
        print("  no solution; rc <= k is", rc_at_most(c5, k))
    else:
        colors = [roots.index(v) for v in point]
        print("  solution", point, "-> colors", colors,
              "rainbow:", rainbow_connected(c5, colors, k))
