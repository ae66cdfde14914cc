"""Acceptance suite.

One test per criterion, each printing a single PASS line with its measured
data (visible with ``pytest -s tests/test_acceptance.py``).  Every tolerance
is exact unless the criterion states otherwise.
"""

import json
import random
import time
from itertools import combinations

from artinfix import hnn
from artinfix.classifier import (
    classify,
    ellipticity,
    normalize_aut,
    rank_bound,
    verify_report,
)
from artinfix.deligne import build_ball, compatibility_probe, fixed_vertices
from artinfix.dihedral import (
    brute_fixed,
    delta_word,
    dihedral_fix,
    edge_graph,
    nf_key,
    subgroup_ball,
    tree_fixed_set,
)
from artinfix.oracle import is_fixed
from artinfix.presentation import validate_graph
from artinfix.words import (
    format_word,
    free_reduce,
    height,
    inner,
    inv,
    mul,
    parse_automorphism,
    parse_word,
    power,
)

TRIANGLE = validate_graph([("a", "b", 3), ("a", "c", 3), ("b", "c", 3)])


def _aut(m, dsl):
    return parse_automorphism(edge_graph(m), dsl)


def _catalog(m):
    delta = format_word(delta_word(m))
    return [
        ("sigma", "graph a>b b>a"),
        ("iota", "invert"),
        ("sigma iota", "graph a>b b>a ; invert"),
        ("phi_a", "conj a"),
        ("phi_Delta", f"conj {delta}"),
        ("phi_ab", "conj a b"),
        ("phi_ab iota", "conj a b ; invert"),
        ("phi_a sigma", "conj a ; graph a>b b>a"),
        ("phi_a sigma iota", "conj a ; graph a>b b>a ; invert"),
    ]


def test_criterion_1_dihedral_brute_equivalence():
    """Brute-forced fixed balls match the generated subgroups, exactly."""
    start = time.time()
    checked = 0
    for m in (3, 4, 5, 6):
        for name, dsl in _catalog(m):
            aut = _aut(m, dsl)
            report = dihedral_fix(m, aut)
            brute = {nf_key(m, w) for w in brute_fixed(m, aut, 8)}
            whole = report.fix_class.tag == "ARTIN"
            generated = subgroup_ball(
                m, report.generators, 8, whole_group=whole
            )
            assert brute == generated, (m, name, report.fix_class.tag)
            checked += 1
    elapsed = time.time() - start
    assert elapsed < 300.0
    print(f"\nACCEPTANCE 1 PASS dihedral brute equivalence "
          f"({checked} automorphisms, {elapsed:.1f}s)")


def test_criterion_2_closed_forms_certified():
    """The stated closed-form generators are certified fixed, exactly."""
    for m in (4, 8):
        n = m // 2
        st, ts = parse_word("a b"), parse_word("b a")
        w = mul(power(st, n // 2), power(inv(ts), n // 2))
        assert is_fixed(_aut(m, "graph a>b b>a ; invert"), w).is_equal
    for m in (6, 10):
        n = m // 2
        st, ts = parse_word("a b"), parse_word("b a")
        w = mul(
            parse_word("b"),
            power(st, (n - 1) // 2),
            power(inv(ts), (n - 1) // 2),
            parse_word("a-"),
        )
        assert is_fixed(_aut(m, "graph a>b b>a ; invert"), w).is_equal
    for m in (4, 6):
        rep = dihedral_fix(m, _aut(m, "graph a>b b>a"))
        assert rep.fix_class.tag == "Z" and rep.exact
        assert nf_key(m, rep.generators[0]) in (
            nf_key(m, delta_word(m)),
            nf_key(m, inv(delta_word(m))),
        )
    for m in (3, 5):
        rep = dihedral_fix(m, _aut(m, f"conj {format_word(delta_word(m))}"))
        assert rep.fix_class.tag == "Z" and rep.exact
        assert nf_key(m, rep.generators[0]) in (
            nf_key(m, delta_word(m)),
            nf_key(m, inv(delta_word(m))),
        )
    print("\nACCEPTANCE 2 PASS closed forms certified")


def _axis_generator(n, k):
    if n % 2 == 1 and k % 2 == 0:
        toks = [("x", k // 2), ("t", 1), ("x", (n - 1) // 2), ("t", 1), ("x", (-k - n - 1) // 2)]
    elif n % 2 == 1:
        toks = [("x", (k + n) // 2), ("t", 1), ("x", (n - 1) // 2), ("t", 1), ("x", (-k - 1) // 2)]
    elif k % 2 == 0:
        toks = [("x", k // 2), ("t", 1), ("x", n // 2), ("t", -1), ("x", (-k - n) // 2)]
    else:
        toks = [("x", (k + 1) // 2), ("t", -1), ("x", n // 2), ("t", 1), ("x", (-k - n - 1) // 2)]
    return hnn.bs_from_tokens(n, toks)


def test_criterion_3_alpha_gamma_tree_axes():
    """The four-parity fixed trees equal the axis lines, exactly."""
    for n, k in ((3, 0), (3, 1), (2, 0), (2, 1)):
        m = 2 * n
        conj = " ".join(["a b"] * k)
        dsl = (f"conj {conj} ; " if conj else "") + "graph a>b b>a ; invert"
        aut = _aut(m, dsl)
        fs = tree_fixed_set(n, aut, radius=6)
        s = _axis_generator(n, k)
        if (n, k) == (3, 0):
            assert s == hnn.bs_from_tokens(3, [("t", 1), ("x", 1), ("t", 1), ("x", -2)])
        base = hnn.vertex_key(n, hnn.BS_IDENTITY)
        assert base in fs.vertices
        order, dist = hnn.tree_ball(n, 6)
        partners = [key for key in hnn.vertex_neighbors(n, base) if key in fs.vertices]
        assert partners
        expected = set()
        for j in range(-8, 9):
            sj = hnn.bs_pow(n, s, j)
            for u in [hnn.BS_IDENTITY] + [hnn.vertex_rep(n, p) for p in partners]:
                key = hnn.vertex_key(n, hnn.bs_mul(n, sj, u))
                if key in dist:
                    expected.add(key)
        assert set(fs.vertices) == expected, (n, k)
        assert not fs.midpoints
    print("\nACCEPTANCE 3 PASS four-parity tree axes exact")


def test_criterion_4_rank_bound_realized():
    """conj_a on the complete all-3 graph realizes the rank bound, exactly."""
    counts = {}
    for n in (3, 4, 5):
        names = [chr(ord("a") + i) for i in range(n)]
        kn = validate_graph([(u, v, 3) for u, v in combinations(names, 2)])
        aut = normalize_aut(kn, "conj a")
        rep = classify(aut)
        bound = rank_bound(n)
        assert len(rep.generators) == bound
        assert rep.confidence == "PROVEN"
        assert all(c.status == "EQUAL" for c in rep.certificates)
        ok, checks = verify_report(aut, rep)
        assert ok, checks
        counts[n] = len(rep.generators)
    assert counts == {3: 5, 4: 10, 5: 17}
    print(f"\nACCEPTANCE 4 PASS rank bound realized {counts}")


def test_criterion_5_deligne_base_cases():
    """Fixed vertices in the fundamental domain match the flag completion."""
    ball = build_ball(TRIANGLE, 1)

    def labels(aut_dsl):
        fixed, lower = fixed_vertices(normalize_aut(TRIANGLE, aut_dsl), ball)
        assert not lower
        return sorted(ball.vertices[i].label() for i in fixed)

    assert labels("") == sorted(v.label() for v in ball.vertices)
    assert labels("graph a>b b>a") == ["1|0", "1|ab", "1|c"]
    assert labels("graph a>b b>c c>a") == ["1|0"]
    print("\nACCEPTANCE 5 PASS fundamental-domain fixed sets exact")


def test_criterion_6_compatibility_probe():
    """A thousand random compatibility probes, zero failures."""
    ball = build_ball(TRIANGLE, 3, local_bound=4)
    passes, failures, unresolved = compatibility_probe(ball, samples=1000, seed=2026)
    assert failures == 0
    assert unresolved == 0
    assert passes == 1000
    print(f"\nACCEPTANCE 6 PASS compatibility probe 1000/1000 "
          f"(ball of {len(ball.vertices)} vertices)")


def test_criterion_7_exotic_hyperbolic():
    """All exotic twist data yields the dihedral subgroup on {b, abc}."""
    z = "a b c a b c"
    cases = []
    for q in (1, 2):
        zq = " ".join([z] * q)
        cases.append(f"conj {zq}")
        cases.append(f"conj {zq} a b ; graph a>c b>a c>b")
        cases.append(f"conj {zq} c- b- ; graph a>b b>c c>a")
    for dsl in cases:
        aut = normalize_aut(TRIANGLE, dsl)
        rep = classify(aut)
        assert rep.fix_class.tag == "DIHEDRAL_A4", dsl
        assert set(rep.generators) == {parse_word("b"), parse_word("a b c")}
        assert all(c.status == "EQUAL" for c in rep.certificates)
        ok, checks = verify_report(aut, rep)
        assert ok, (dsl, checks)
        assert any("dihedral relation" in name and passed for name, passed, _ in checks)
    print(f"\nACCEPTANCE 7 PASS exotic hyperbolic cases ({len(cases)} automorphisms)")


def test_criterion_8_inversion_height_obstruction():
    """Fifty hyperbolic automorphisms with the inversion: class Z, height 0."""
    rng = random.Random(88)
    letters = [(v, s) for v in TRIANGLE.vertices for s in (1, -1)]
    sigmas = ["", "graph a>b b>a", "graph a>b b>c c>a"]
    found = 0
    attempts = 0
    while found < 50:
        attempts += 1
        assert attempts < 500
        g = free_reduce(rng.choices(letters, k=rng.randint(2, 6)))
        dsl = f"conj {format_word(g)} ; {rng.choice(sigmas)} ; invert"
        aut = normalize_aut(TRIANGLE, dsl)
        state, _ = ellipticity(aut, search_len=3)
        if state != "HYPERBOLIC":
            continue
        rep = classify(aut, search_len=3)
        assert rep.fix_class.tag == "Z", dsl
        for w, cert in zip(rep.generators, rep.certificates):
            assert cert.status == "EQUAL"
            assert height(w) == 0, dsl
        found += 1
    print(f"\nACCEPTANCE 8 PASS inversion height obstruction "
          f"(50 hyperbolic samples, {attempts} attempts)")


def test_criterion_9_isogredience_covariance():
    """Reports transform by conjugation: certified on 20 random pairs."""
    rng = random.Random(99)
    letters = [(v, s) for v in TRIANGLE.vertices for s in (1, -1)]
    base = [
        "graph a>b b>a",
        "graph a>b b>c c>a",
        "conj a",
        "conj a ; invert",
        "conj a b c a b c",
        "conj a b c a b c a b ; graph a>c b>a c>b",
        "conj a b c a b c ; invert",
    ]
    for i in range(20):
        dsl = base[i % len(base)]
        h = free_reduce(rng.choices(letters, k=rng.randint(1, 2)))
        gamma = normalize_aut(TRIANGLE, dsl)
        conj = inner(TRIANGLE, h)
        gamma2 = conj.compose(gamma).compose(conj.inverse())
        rep = classify(gamma)
        rep2 = classify(gamma2)
        assert rep.fix_class.tag == rep2.fix_class.tag, (dsl, format_word(h))
        for w in rep.generators:
            assert is_fixed(gamma2, mul(h, w, inv(h))).is_equal, (dsl, format_word(h))
        for w in rep2.generators:
            assert is_fixed(gamma, mul(inv(h), w, h)).is_equal, (dsl, format_word(h))
    print("\nACCEPTANCE 9 PASS isogredience covariance (20 pairs)")


def test_criterion_10_determinism():
    """Repeated runs produce byte-identical reports."""
    samples = [
        ("graph a>b b>a", TRIANGLE),
        ("conj a", TRIANGLE),
        ("conj a b c a b c", TRIANGLE),
        ("conj a b c a b c ; invert", TRIANGLE),
    ]

    def run_once():
        chunks = []
        for dsl, graph in samples:
            rep = classify(normalize_aut(graph, dsl))
            chunks.append(rep.dumps())
        for m in (3, 4):
            for name, dsl in _catalog(m):
                rep = dihedral_fix(m, _aut(m, dsl))
                chunks.append(rep.dumps())
            aut = _aut(m, "graph a>b b>a ; invert")
            chunks.append(json.dumps([format_word(w) for w in brute_fixed(m, aut, 6)]))
        ball = build_ball(TRIANGLE, 1)
        chunks.append(ball.dumps())
        return "\n".join(chunks)

    first = run_once()
    second = run_once()
    assert first == second
    print("\nACCEPTANCE 10 PASS determinism (byte-identical reruns)")
