import json

from artinfix.cli import main

TRI = "edge a b 3; edge a c 3; edge b c 3"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_validate(capsys):
    code, out = run(capsys, ["validate", "--graph-text", TRI])
    assert code == 0
    assert "a b 3" in out and "budgets" in out


def test_validate_error(capsys):
    code = main(["validate", "--graph-text", "edge a b 2"])
    assert code == 1
    assert "COEFFICIENT_BELOW_3" in capsys.readouterr().err


def test_autgen(capsys):
    code, out = run(capsys, ["autgen", "--graph-text", TRI, "--format", "json"])
    assert code == 0
    assert json.loads(out)["count"] == 6


def test_classify_sigma(capsys):
    code, out = run(
        capsys, ["classify", "--graph-text", TRI, "--aut", "graph a>b b>a"]
    )
    assert code == 0
    assert "Artin[c] * F_1" in out
    assert "a b a" in out


def test_fix_gens_json(capsys):
    code, out = run(
        capsys,
        ["fix-gens", "--graph-text", TRI, "--aut", "conj a", "--format", "json"],
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["generators"]) == 5


def test_verify(capsys):
    code, out = run(
        capsys,
        ["verify", "--graph-text", TRI, "--aut", "conj a b c a b c"],
    )
    assert code == 0
    assert "PASS" in out and "verified    True" in out


def test_dihedral_nf(capsys):
    code, out = run(capsys, ["dihedral", "nf", "--m", "3", "--word", "a b a"])
    assert code == 0
    assert "power     1" in out


def test_dihedral_fix(capsys):
    code, out = run(
        capsys,
        ["dihedral", "fix", "--m", "4", "--aut", "graph a>b b>a ; invert", "--format", "json"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["class"] == "Z"
    assert data["generators"][0] in ("a- b- a b", "a b a- b-", "b a b- a-", "b- a- b a")


def test_dihedral_tree(capsys):
    code, out = run(
        capsys,
        ["dihedral", "tree", "--m", "4", "--aut", "graph a>b b>a", "--radius", "2"],
    )
    assert code == 0
    assert "inverted midpoints (1)" in out


def test_deligne_ball_and_fixed(capsys):
    code, out = run(
        capsys,
        ["deligne", "ball", "--graph-text", TRI, "--radius", "1", "--format", "json"],
    )
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 7
    code, out = run(
        capsys,
        [
            "deligne", "fixed", "--graph-text", TRI, "--radius", "1",
            "--aut", "graph a>b b>a",
        ],
    )
    assert code == 0
    assert "1|ab" in out and "1|c" in out


def test_graph_emit(capsys):
    code, out = run(capsys, ["graph", "emit", "--graph-text", TRI])
    assert code == 0 and "graph G {" in out
    code, out = run(
        capsys,
        ["graph", "emit", "--graph-text", TRI, "--odd-base", "a", "--sigma", ""],
    )
    assert code == 0 and "label" in out


def test_oracle_eq(capsys):
    code, out = run(capsys, ["oracle", "eq", "--graph-text", TRI, "a b a", "b a b"])
    assert code == 0
    assert out.startswith("EQUAL")


def test_strict_exit_code(capsys):
    code, out = run(
        capsys,
        ["oracle", "eq", "--graph-text", TRI, "--budget", "1", "--strict",
         "a b c a b c a", "a a b c a b c"],
    )
    assert code in (0, 2)  # 2 exactly when the verdict stayed UNKNOWN
    if "UNKNOWN" in out:
        assert code == 2


def test_byte_identical_reruns(capsys):
    argv = ["classify", "--graph-text", TRI, "--aut", "conj a", "--format", "json"]
    _, first = run(capsys, argv)
    _, second = run(capsys, argv)
    assert first == second


def test_graph_file_input(tmp_path, capsys):
    gfile = tmp_path / "tri.g"
    gfile.write_text("edge a b 3\nedge a c 3\nedge b c 3\n")
    code, out = run(capsys, ["classify", "--graph", str(gfile), "--aut", "conj a"])
    assert code == 0
    assert "Z x F_4" in out


def test_cross_process_determinism(tmp_path):
    # same invocation, different interpreter processes and hash seeds:
    # byte-identical output
    import os
    import subprocess
    import sys

    gfile = tmp_path / "tri.g"
    gfile.write_text("edge a b 3\nedge a c 3\nedge b c 3\n")
    argv = [
        sys.executable, "-m", "artinfix.cli", "classify",
        "--graph", str(gfile), "--aut", "conj a", "--format", "json",
    ]
    outputs = []
    for seed in ("0", "424242"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        result = subprocess.run(argv, capture_output=True, text=True, env=env)
        assert result.returncode == 0, result.stderr
        outputs.append(result.stdout)
    assert outputs[0] == outputs[1]
