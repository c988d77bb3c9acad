"""Command-line behavior: exit codes, reports, round trips."""

import json

from surfalg.cli import (EXIT_INVALID, EXIT_OK, EXIT_PARSE,
                         EXIT_UNREADABLE, EXIT_USAGE, run)

DISC = """field GF(7)
vertices 1 2
arrow alpha 1 1
arrow beta 1 2
arrow gamma 2 1
arrow sigma 2 2
f (alpha beta gamma) (sigma)
m alpha 3
m beta 1
c alpha 2
"""


def test_unknown_verb():
    assert run(["frobnicate"]) == EXIT_USAGE


def test_validate_builtin(capsys):
    assert run(["validate", "--builtin", "disc"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "triangulation quiver: ok" in out


def test_validate_file(tmp_path, capsys):
    path = tmp_path / "disc.spec"
    path.write_text(DISC)
    assert run(["validate", "--input", str(path)]) == EXIT_OK


def test_validate_invalid_f(tmp_path, capsys):
    path = tmp_path / "bad.spec"
    path.write_text(DISC.replace("(alpha beta gamma) (sigma)", "(alpha beta) (gamma sigma)"))
    assert run(["validate", "--input", str(path)]) == EXIT_INVALID
    assert "INVALID" in capsys.readouterr().out


def test_unreadable_file():
    assert run(["validate", "--input", "/nonexistent/path.spec"]) == EXIT_UNREADABLE


def test_parse_error(tmp_path):
    path = tmp_path / "broken.spec"
    path.write_text("field GF(7)\nfrobnicate 1\n")
    assert run(["validate", "--input", str(path)]) == EXIT_PARSE


def test_assumption_violation_exit(capsys):
    code = run(["build", "--builtin", "disc", "--param", "m_alpha=2"])
    assert code == EXIT_INVALID


def test_singular_socle_exit(capsys):
    code = run(["build", "--builtin", "triangle", "--param", "c1=1",
                "--param", "c2=1", "--param", "c3=1", "--field", "GF(7)"])
    assert code == EXIT_INVALID
    assert "singular socle" in capsys.readouterr().err


def test_period_all(capsys):
    code = run(["period", "--builtin", "tetrahedral", "--param", "lam=2",
                "--field", "GF(5)", "--all", "--max", "8", "--json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert set(payload["results"]["periods"].values()) == {4}


def test_classify_phi(capsys):
    code = run(["classify", "--builtin", "phi", "--json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["family"] == "Phi"


def test_cartan_row_sums_match_info(capsys):
    code = run(["cartan", "--builtin", "sigma_r", "--param", "r=3", "--json"])
    assert code == EXIT_OK
    cartan = json.loads(capsys.readouterr().out)["results"]["matrix"]
    code = run(["info", "--builtin", "sigma_r", "--param", "r=3", "--json"])
    assert code == EXIT_OK
    info = json.loads(capsys.readouterr().out)["results"]
    verts = info["vertices"]
    for i, v in enumerate(verts):
        assert sum(cartan[i]) == info["projective_dims"][v]


def test_table_roundtrip_byte_identical(tmp_path):
    out1 = tmp_path / "t1.json"
    out2 = tmp_path / "t2.json"
    assert run(["build", "--builtin", "sigma", "--field", "GF(7)",
                "--out", str(out1), "--json"]) == EXIT_OK
    assert run(["build", "--builtin", "sigma", "--field", "GF(7)",
                "--out", str(out2), "--json"]) == EXIT_OK
    doc1 = out1.read_text()
    assert doc1 == out2.read_text()
    from surfalg.algebra import canonical_json, table_from_json
    assert canonical_json(table_from_json(doc1.strip()).to_json_obj()) == doc1.strip()


def test_bimodule_verb(capsys):
    code = run(["bimodule", "--builtin", "disc", "--field", "GF(5)", "--json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["verdict"] == "Periodic4"


def test_degenerate_verbs(capsys):
    assert run(["degenerate", "--builtin", "omega_r", "--param", "r=5",
                "--field", "GF(7)", "--t", "2"]) == EXIT_OK
    assert run(["degenerate", "--builtin", "omega_r", "--param", "r=5",
                "--field", "GF(7)", "--t", "0"]) == EXIT_OK
    assert run(["degenerate", "--builtin", "disc", "--field", "GF(7)",
                "--t", "2"]) == EXIT_INVALID


def test_walks_verb(capsys):
    assert run(["walks", "--builtin", "omega_r", "--param", "r=4",
                "--walk", "alpha,gamma^-1,sigma,beta^-1"]) == EXIT_OK
    assert "band" in capsys.readouterr().out
    assert run(["walks", "--builtin", "omega_r", "--param", "r=4",
                "--enumerate", "4", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["bands"]


def test_symmetric_verb():
    assert run(["symmetric", "--builtin", "psi_r", "--param", "r=2",
                "--field", "GF(7)"]) == EXIT_OK


def test_resolve_verb(capsys):
    code = run(["resolve", "--builtin", "sigma_r", "--param", "r=3",
                "--field", "GF(5)", "--json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["ext2_matches_arrows"]


def test_jobs_flag(capsys):
    code = run(["period", "--builtin", "disc", "--field", "GF(5)", "--all",
                "--max", "4", "--jobs", "2", "--json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert set(payload["results"]["periods"].values()) == {4}


def test_builtin_listing(capsys):
    assert run(["builtin"]) == EXIT_OK
    assert "psi_r" in capsys.readouterr().out
