"""Defining graphs, their symmetries, and the derived odd-component graphs.

Everything downstream is driven by a labelled simplicial graph: vertices are
the standard generators, an edge labelled m imposes the relation equating the
two alternating products of length m.  Large type means every label is at
least 3.  This script walks through validation, automorphism enumeration, and
the barycentric bookkeeping from which free bases of fixed subgroups are read.
"""

from artinfix import (
    gamma_a_odd,
    graph_automorphisms,
    pi1_basis,
    sigma_data,
    validate_graph,
)
from artinfix.words import format_word

triangle = validate_graph([("a", "b", 3), ("a", "c", 3), ("b", "c", 3)])
print("the all-3 triangle:", triangle.vertices, triangle.edge_list)

auts = graph_automorphisms(triangle)
print(f"\n{len(auts)} label-preserving automorphisms (a full symmetric group):")
for s in auts:
    print("  ", " ".join(f"{v}>{s(v)}" for v in triangle.vertices))

swap = next(s for s in auts if s.images == ("b", "a", "c"))
data = sigma_data(triangle, swap)
print("\nswap(a,b): fixed vertices", data.fixed_vertices,
      "transposed pairs", data.transposed_pairs)

# Labels on a 4-edge break most of the symmetry.
mixed = validate_graph([("a", "b", 4), ("a", "c", 3), ("b", "c", 3)])
print("\n3-3-4 triangle automorphisms:",
      [s.images for s in graph_automorphisms(mixed)])

# The odd component graph: barycentric subdivision restricted to fixed
# vertices, cut along even-coefficient edge vertices.  Its loops and edge
# vertices parametrize the free part of centralizer-like fixed subgroups.
ident = auts[0]
hexagon = gamma_a_odd(triangle, ident, "a")
print("\nodd component of the triangle at a:",
      len(hexagon.nodes), "nodes,", len(hexagon.edges), "edges,",
      "first Betti number", hexagon.betti())
for loop in pi1_basis(hexagon):
    print("  loop word:", format_word(loop))

cut = gamma_a_odd(mixed, graph_automorphisms(mixed)[0], "a")
print("\nsame construction on the 3-3-4 triangle (the 4-edge is cut):",
      "Betti", cut.betti())
print("\nDOT export of the hexagon:")
print(hexagon.dot())
