import math

import pytest

from artinfix.deligne import (
    DeligneVertex,
    aut_action,
    build_ball,
    compatibility_probe,
    displacement_field,
    fixed_vertices,
    minset_slice,
    simplex_shape,
    standard_tree_ball,
)
from artinfix.oracle import is_fixed
from artinfix.presentation import GraphError
from artinfix.words import inner, mul, parse_automorphism, parse_word


def _labels(ball, vids):
    return sorted(ball.vertices[i].label() for i in vids)


@pytest.fixture(scope="module")
def ball1(triangle):
    return build_ball(triangle, 1)


@pytest.fixture(scope="module")
def ball2(triangle):
    return build_ball(triangle, 2, local_bound=4)


def test_radius_zero(triangle):
    ball = build_ball(triangle, 0)
    assert [v.label() for v in ball.vertices] == ["1|0"]


def test_fundamental_domain(ball1):
    # the cone over the barycentric subdivision: 1 + 3 + 3 vertices
    assert len(ball1.vertices) == 7
    assert sorted(v.label() for v in ball1.vertices) == [
        "1|0", "1|a", "1|ab", "1|ac", "1|b", "1|bc", "1|c",
    ]
    assert len(ball1.triangles()) == 6  # two per edge vertex? one per chain
    # every edge realizes an inclusion, base joins everything
    assert len(ball1.edges) == 3 + 3 + 6


def test_aut_action_formulas(triangle):
    swap = parse_automorphism(triangle, "graph a>b b>a")
    va = DeligneVertex((), ("a",))
    assert aut_action(swap, va).S == ("b",)
    phi = parse_automorphism(triangle, "conj b a")
    v = DeligneVertex(parse_word("c"), ())
    assert aut_action(phi, v).rep == parse_word("b a c")
    iota = parse_automorphism(triangle, "invert")
    v = DeligneVertex(parse_word("a"), ())
    assert aut_action(iota, v).rep == parse_word("a-")
    assert aut_action(iota, v).S == ()


def test_fixed_base_cases(triangle, ball1):
    swap = parse_automorphism(triangle, "graph a>b b>a")
    fixed, lower = fixed_vertices(swap, ball1)
    assert not lower
    assert _labels(ball1, fixed) == ["1|0", "1|ab", "1|c"]

    cycle = parse_automorphism(triangle, "graph a>b b>c c>a")
    fixed, lower = fixed_vertices(cycle, ball1)
    assert not lower
    assert _labels(ball1, fixed) == ["1|0"]

    ident = parse_automorphism(triangle, "")
    fixed, _ = fixed_vertices(ident, ball1)
    assert len(fixed) == len(ball1.vertices)

    # conj_a iota: the base vertex moves, the generator vertex holds
    gai = parse_automorphism(triangle, "conj a ; invert")
    fixed, _ = fixed_vertices(gai, ball1)
    assert _labels(ball1, fixed) == ["1|a", "1|ab", "1|ac"]


def test_swap_fixes_garside_translate(triangle, ball2):
    swap = parse_automorphism(triangle, "graph a>b b>a")
    fixed, _ = fixed_vertices(swap, ball2)
    labels = _labels(ball2, fixed)
    assert any(lbl in ("a b a|0", "b a b|0") for lbl in labels)


def test_fixed_set_respects_stabilization(triangle, ball2):
    # a certified fixed element moves fixed vertices to fixed vertices
    swap = parse_automorphism(triangle, "graph a>b b>a")
    fixed, _ = fixed_vertices(swap, ball2)
    fixed_set = set(fixed)
    w = parse_word("c")
    assert is_fixed(swap, w).is_equal
    for vid in fixed:
        vtx = ball2.vertices[vid]
        image = ball2.resolve(mul(w, vtx.rep), vtx.S, budget=200)
        if image is not None:
            assert image in fixed_set


def test_type2_inner_fixes_single_vertex(triangle, ball1):
    # conjugation by the Garside element of one edge fixes only that vertex in K
    phi = inner(triangle, parse_word("a b a b"))  # not central in the edge group
    fixed, _ = fixed_vertices(phi, ball1)
    assert _labels(ball1, fixed) == ["1|ab"]


def test_standard_tree(triangle):
    ball, fixed = standard_tree_ball(triangle, (), "a", radius=2, local_bound=4)
    labels = _labels(ball, fixed)
    assert "1|a" in labels and "1|ab" in labels and "1|ac" in labels
    # no base-orbit vertices: heights obstruct them
    assert all("|0" not in lbl for lbl in labels)


def test_standard_tree_translate_equivariance(triangle):
    # the fixed tree of conj_{bab^-1} is the b-translate of the tree of conj_a
    ball = build_ball(triangle, 2, local_bound=4)
    _, tree_a = standard_tree_ball(ball, (), "a")
    _, tree_b = standard_tree_ball(ball, parse_word("b"), "a")
    translated = set()
    for vid in tree_a:
        vtx = ball.vertices[vid]
        image = ball.resolve(mul(parse_word("b"), vtx.rep), vtx.S, budget=300)
        if image is not None:
            translated.add(image)
    assert translated
    assert translated <= set(tree_b)


def test_displacement_field(triangle):
    ball = build_ball(triangle, 2, local_bound=3)
    field = displacement_field(parse_word("a"), ball)
    zero = [v for v, d in field.items() if d == 0]
    assert zero == sorted(zero)
    tree_ball, tree_fixed = standard_tree_ball(ball, (), "a")
    assert set(zero) == set(tree_fixed)
    slice_ = minset_slice(field)
    assert set(slice_) == set(zero)


def test_displacement_hyperbolic(triangle):
    ball = build_ball(triangle, 1)
    field = displacement_field(parse_word("a b c a b c"), ball)
    assert all(d is None or d > 0 for d in field.values())


def test_displacement_edge_group(edge3):
    ball = build_ball(edge3, 2, local_bound=4)
    field = displacement_field(parse_word("a b"), ball)
    zero = {v for v, d in field.items() if d == 0}
    labels = {ball.vertices[v].label() for v in zero}
    assert labels == {"1|ab"}


def test_simplex_shape_values():
    shape = simplex_shape(3)
    assert shape.angles[2] == pytest.approx(math.pi / 6)
    assert shape.angles[1] == pytest.approx(math.pi / 2)
    assert sum(shape.angles) == pytest.approx(math.pi)
    assert shape.sides[0] == 1.0
    assert shape.sides[2] == pytest.approx(2.0)  # base to edge vertex
    assert shape.sides[1] == pytest.approx(math.sqrt(3))
    assert simplex_shape(4).angles[2] == pytest.approx(math.pi / 8)
    # monotone growth of the long side as the coefficient grows
    sides = [simplex_shape(m).sides[2] for m in (3, 4, 5, 6, 12)]
    assert sides == sorted(sides)
    with pytest.raises(GraphError):
        simplex_shape(2)


def test_compatibility_probe(triangle, ball2):
    passes, failures, unresolved = compatibility_probe(ball2, samples=200, seed=5)
    assert failures == 0
    assert passes + unresolved == 200
    assert unresolved == 0


def test_ball_exports(triangle, ball1):
    data = ball1.to_json()
    assert data["radius"] == 1 and len(data["vertices"]) == 7
    dot = ball1.essential_dot()
    assert "graph essential" in dot
    assert ball1.dumps().startswith("{")


def test_edge_graph_ball_contents(edge3):
    # radius-2 ball over a single odd edge: the fundamental square plus the
    # generator translates of the base vertex
    ball = build_ball(edge3, 2, local_bound=4)
    labels = {v.label() for v in ball.vertices}
    assert {"1|0", "1|a", "1|b", "1|ab"} <= labels
    assert {"a|0", "a-|0", "b|0", "b-|0"} <= labels


def test_action_preserves_type(triangle):
    swap = parse_automorphism(triangle, "graph a>b b>a")
    for S in ((), ("a",), ("a", "b")):
        v = DeligneVertex(parse_word("c a"), S)
        assert aut_action(swap, v).vertex_type == len(S)
