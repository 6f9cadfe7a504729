"""
Graphs that cannot be split
===========================

The exact oracle settles instances the construction does not cover. Cycles
split into two total dominating sets only when their length is a multiple
of four, and the Heawood graph does not split at all.
"""

from tdp import exact_two_colorable, find_l_witness, gen_named, onh, total_domatic_number
from tdp.oracle import hypergraph_two_coloring

for n in range(4, 17):
    c = gen_named("cycle", n)
    print(f"C{n:<3} two-colourable: {exact_two_colorable(c) is not None}")

h = gen_named("heawood")
w = find_l_witness(h)
print("Heawood L witness centred at", w.center, "with leaves", w.leaves)

res = total_domatic_number(h)
print("Heawood total domatic number:", res.d_t, "(proven:", res.proven, ", nodes:", res.nodes, ")")

# The same answer from the open neighbourhood hypergraph: a 2-colouring with
# no monochromatic hyperedge exists exactly when the graph splits.
print("ONH 2-colouring:", hypergraph_two_coloring(onh(h)))

# Containing L does not by itself rule out a split: Petersen has L but d_t = 2.
p = gen_named("petersen")
print("Petersen: L present =", find_l_witness(p) is not None, ", d_t =", total_domatic_number(p).d_t)
