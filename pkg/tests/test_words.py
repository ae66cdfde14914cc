import random

import pytest

from artinfix.presentation import GraphError, graph_automorphisms
from artinfix.words import (
    ArtinAutomorphism,
    abelianization_vector,
    format_word,
    free_reduce,
    global_inversion,
    height,
    inner,
    mul,
    odd_components,
    parse_automorphism,
    parse_word,
)


def test_free_reduce():
    assert parse_word("a b b- c") == parse_word("a c")
    assert parse_word("") == ()
    assert parse_word("a a a") == (("a", 1),) * 3
    w = parse_word("a b- c")
    assert free_reduce(w) == w  # idempotent


def test_word_syntax():
    assert parse_word("a^3") == (("a", 1),) * 3
    assert parse_word("a^-2") == (("a", -1),) * 2
    assert parse_word("a-") == (("a", -1),)
    assert format_word(parse_word("a a a b-")) == "a^3 b-"
    assert format_word(()) == "1"


def test_height():
    assert height(parse_word("a b c")) == 3
    assert height(parse_word("a- b")) == 0
    assert height(parse_word("a b c a b c")) == 6


def test_height_homomorphism():
    rng = random.Random(7)
    letters = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]
    for _ in range(100):
        u = free_reduce(rng.choices(letters, k=6))
        v = free_reduce(rng.choices(letters, k=6))
        assert height(mul(u, v)) == height(u) + height(v)


def test_apply_inversion(triangle):
    iota = global_inversion(triangle)
    assert iota(parse_word("a b")) == parse_word("a- b-")


def test_apply_graph_swap(triangle):
    sig = parse_automorphism(triangle, "graph a>b b>a")
    assert sig(parse_word("a b a")) == parse_word("b a b")


def test_apply_inner_with_cycle(triangle):
    gamma = parse_automorphism(triangle, "conj c ; graph a>b b>c c>a")
    assert gamma(parse_word("a")) == parse_word("c b c-")


def test_unknown_generator(triangle):
    gamma = global_inversion(triangle)
    with pytest.raises(GraphError) as err:
        gamma(parse_word("x"))
    assert err.value.code == "UNKNOWN_GENERATOR"


def test_compose_commutation_rule(triangle):
    # graph parts move past conjugations by twisting the conjugator
    sig = parse_automorphism(triangle, "graph a>b b>a")
    phi = inner(triangle, parse_word("a b"))
    composed = sig.compose(phi)
    expected = inner(triangle, sig.graph_part(parse_word("a b"))).compose(sig)
    assert composed == expected


def test_inversion_involution(triangle):
    iota = global_inversion(triangle)
    assert iota.compose(iota).is_identity_triple


def test_compose_matches_application(triangle):
    rng = random.Random(3)
    auts = graph_automorphisms(triangle)
    letters = [(v, s) for v in triangle.vertices for s in (1, -1)]
    for _ in range(60):
        g1 = ArtinAutomorphism(
            triangle,
            free_reduce(rng.choices(letters, k=rng.randint(0, 4))),
            rng.choice(auts),
            rng.choice((False, True)),
        )
        g2 = ArtinAutomorphism(
            triangle,
            free_reduce(rng.choices(letters, k=rng.randint(0, 4))),
            rng.choice(auts),
            rng.choice((False, True)),
        )
        w = free_reduce(rng.choices(letters, k=5))
        assert g1.compose(g2)(w) == g1(g2(w))


def test_inverse_automorphism(triangle):
    rng = random.Random(5)
    auts = graph_automorphisms(triangle)
    letters = [(v, s) for v in triangle.vertices for s in (1, -1)]
    for _ in range(40):
        g = ArtinAutomorphism(
            triangle,
            free_reduce(rng.choices(letters, k=3)),
            rng.choice(auts),
            rng.choice((False, True)),
        )
        w = free_reduce(rng.choices(letters, k=5))
        assert g.inverse()(g(w)) == free_reduce(w)


def test_squared_graph_inversion(triangle):
    gamma = parse_automorphism(triangle, "conj a b ; graph a>b b>a ; invert")
    square = gamma.compose(gamma)
    # (conj_g sigma iota)^2 = conj_{g . sigma iota(g)} sigma^2
    psi = parse_automorphism(triangle, "graph a>b b>a ; invert")
    expected_conj = mul(parse_word("a b"), psi(parse_word("a b")))
    assert square.conj == free_reduce(expected_conj)
    assert not square.inversion


def test_height_under_automorphisms(triangle):
    gamma = parse_automorphism(triangle, "conj a b ; graph a>b b>a")
    iota_gamma = parse_automorphism(triangle, "conj a b ; graph a>b b>a ; invert")
    w = parse_word("a b c- a")
    assert height(gamma(w)) == height(w)
    assert height(iota_gamma(w)) == -height(w)


def test_odd_components(edge4, triangle, mixed334):
    assert odd_components(triangle) == (("a", "b", "c"),)
    assert odd_components(edge4) == (("a",), ("b",))
    assert odd_components(mixed334) == (("a", "b", "c"),)


def test_abelianization_vectors(edge4, triangle):
    assert abelianization_vector(triangle, parse_word("a b c")) == (3,)
    assert abelianization_vector(edge4, parse_word("a b-")) == (1, -1)
    w = (("a", 1), ("b", 1), ("b", -1), ("c", 1))
    assert abelianization_vector(triangle, w) == abelianization_vector(
        triangle, free_reduce(w)
    )


def test_dsl_roundtrip(triangle):
    gamma = parse_automorphism(triangle, "conj a b ; graph a>b b>a ; invert")
    again = parse_automorphism(triangle, gamma.describe())
    assert gamma == again


def test_psi_order(triangle):
    assert parse_automorphism(triangle, "graph a>b b>a").psi_order() == 2
    assert parse_automorphism(triangle, "graph a>b b>c c>a").psi_order() == 3
    assert parse_automorphism(triangle, "graph a>b b>c c>a ; invert").psi_order() == 6
    assert parse_automorphism(triangle, "invert").psi_order() == 2
    assert parse_automorphism(triangle, "conj a").psi_order() == 1
