"""Finite balls of the coset complex and the automorphism action on them.

Vertices are cosets of the spherical standard parabolics (the trivial group,
the cyclic generator subgroups, and the finite-coefficient edge subgroups),
with simplices from coset inclusion.  The complex is locally infinite, so
balls are materialized with a bound on the local elements used to step
between cosets.  An automorphism conj_h sigma iota^e sends the coset g A_S to
h sigma(iota^e(g)) A_{sigma(S)}, and a vertex is fixed exactly when sigma
preserves S and g^-1 h psi(g) lies in A_S.
"""

from artinfix import (
    build_ball,
    compatibility_probe,
    displacement_field,
    fixed_vertices,
    simplex_shape,
    standard_tree_ball,
    validate_graph,
)
from artinfix.deligne import minset_slice
from artinfix.words import parse_automorphism, parse_word

triangle = validate_graph([("a", "b", 3), ("a", "c", 3), ("b", "c", 3)])

kernel = build_ball(triangle, 1)
print("radius-1 ball = the cone over the barycentric subdivision:")
print("  vertices:", sorted(v.label() for v in kernel.vertices))
print("  triangles:", len(kernel.triangles()))

print("\nfixed vertices in the fundamental domain:")
for dsl in ("graph a>b b>a", "graph a>b b>c c>a", "conj a ; invert"):
    fixed, _ = fixed_vertices(parse_automorphism(triangle, dsl), kernel)
    print(f"  {dsl:<22} -> {sorted(kernel.vertices[i].label() for i in fixed)}")

ball = build_ball(triangle, 2, local_bound=4)
print(f"\nradius-2 ball: {len(ball.vertices)} vertices, {len(ball.edges)} edges")

swap = parse_automorphism(triangle, "graph a>b b>a")
fixed, lower = fixed_vertices(swap, ball)
print("swap-fixed vertices include the Garside translate:",
      sorted(ball.vertices[i].label() for i in fixed)[:8], "...")

print("\nzero-displacement slice of conj_a = the standard tree through v_a:")
small = build_ball(triangle, 2, local_bound=3)
field = displacement_field(parse_word("a"), small)
slice_ = minset_slice(field)
_, tree = standard_tree_ball(small, (), "a")
print("  slice:", sorted(small.vertices[i].label() for i in slice_))
print("  equals the standard-tree fixed set:", set(slice_) == set(tree))

print("\nthe hexagonal centre displaces every vertex (it acts hyperbolically):")
field = displacement_field(parse_word("a b c a b c"), kernel)
print("  displacements:", sorted(d for d in field.values() if d is not None))

print("\nEuclidean simplex data per coefficient (angles at base/gen/edge):")
for m in (3, 4, 6):
    shape = simplex_shape(m)
    print(f"  m={m}: angles {tuple(round(x, 4) for x in shape.angles)}"
          f" sides {tuple(round(x, 4) for x in shape.sides)}")

passes, failures, unresolved = compatibility_probe(ball, samples=300, seed=1)
print(f"\ncompatibility probe psi.(gx) = psi(g)(psi.x): "
      f"{passes} passes, {failures} failures, {unresolved} unresolved")
