import json
import subprocess
import sys

import pytest

from coveralg.cli import main

REPORT_KEYS = {
    "n", "relations", "lattice_size", "minimal_covers", "h_vector", "numerator",
    "denom_exp", "multiplicity", "a_invariant", "dimension", "checks",
}


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.json"
    path.write_text(json.dumps({"n": 3, "relations": [[1, 2], [1, 3]]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "coveralg", *argv],
        input=stdin, capture_output=True, text=True,
    )


def test_analyze_p3(capsys, p3_file):
    code, out, _ = run(capsys, "--json", "analyze", "--poset", p3_file)
    assert code == 0
    rep = json.loads(out)
    assert REPORT_KEYS <= rep.keys()
    assert rep["h_vector"] == [1, 4, 4, 1]
    assert rep["multiplicity"] == 10
    assert rep["a_invariant"] == -4
    assert rep["lattice_size"] == rep["minimal_covers"] == 5
    assert all(rep["checks"].values())


def test_json_flag_after_subcommand(capsys, p3_file):
    code, out, _ = run(capsys, "analyze", "--poset", p3_file, "--json")
    assert code == 0 and json.loads(out)["h_vector"] == [1, 4, 4, 1]


def test_gen_pipe_analyze():
    gen = cli("gen", "--kind", "chain", "--n", "3")
    assert gen.returncode == 0
    res = cli("--json", "analyze", stdin=gen.stdout)
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["h_vector"] == [1, 3, 3, 1] and rep["multiplicity"] == 8


def test_oracle_verify_all(capsys, p3_file):
    code, out, _ = run(capsys, "--json", "oracle-verify", "--poset", p3_file, "--kmax", "3", "--mode", "all")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and set(rep["checks"]) == {"graded", "power", "basic", "lemma", "monotone"}
    assert rep["checks"]["graded"]["h_vector_oracle"] == [1, 4, 4, 1]


def test_oracle_verify_all_skips_capped(capsys, tmp_path):
    path = tmp_path / "a4.json"
    path.write_text(json.dumps({"n": 4, "relations": []}))
    code, out, _ = run(capsys, "--json", "oracle-verify", "--poset", str(path), "--kmax", "2")
    rep = json.loads(out)
    assert code == 0 and "skipped" in rep["checks"]["power"]


def test_explicit_mode_over_cap_exits_1(capsys, tmp_path):
    path = tmp_path / "a4.json"
    path.write_text(json.dumps({"n": 4, "relations": []}))
    code, out, _ = run(capsys, "--json", "oracle-verify", "--poset", str(path), "--mode", "power")
    assert code == 1
    assert json.loads(out)["error"] == "SizeLimit"


def test_oracle_disagreement_exits_1(capsys, p3_file, monkeypatch):
    from coveralg import oracle

    monkeypatch.setattr(oracle, "hilbert_function_bruteforce", lambda p, k: 0)
    code, out, _ = run(capsys, "--json", "oracle-verify", "--poset", p3_file, "--mode", "graded")
    assert code == 1 and json.loads(out)["ok"] is False


def test_size_limit(capsys, p3_file):
    code, out, _ = run(capsys, "--json", "--max-n", "2", "analyze", "--poset", p3_file)
    assert code == 1 and json.loads(out)["error"] == "SizeLimit"


@pytest.mark.parametrize(
    "argv",
    [["bogus"], ["analyze", "--poset", "/nonexistent.json"], ["gen", "--kind", "tree", "--n", "3"], []],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bad_poset_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "relations": [[1, 2], [2, 1]]}))
    code, _, err = run(capsys, "analyze", "--poset", str(path))
    assert code == 2 and "cycle" in err


def test_non_natural_input_is_relabeled(capsys, caplog, tmp_path):
    path = tmp_path / "rev.json"
    path.write_text(json.dumps({"n": 3, "relations": [[3, 1], [3, 2]]}))
    code, out, _ = run(capsys, "--json", "analyze", "--poset", str(path))
    assert code == 0 and "relabeled" in caplog.text
    assert json.loads(out)["h_vector"] == [1, 4, 4, 1]


def test_covers_and_lattice_text(capsys, p3_file):
    _, out, _ = run(capsys, "covers", "--poset", p3_file)
    assert out.splitlines() == [
        "{y1, y2, y3}", "{x1, y2, y3}", "{x1, x2, y3}", "{x1, x3, y2}", "{x1, x2, x3}",
    ]
    _, out, _ = run(capsys, "lattice", "--poset", p3_file)
    assert out.splitlines() == ["[]", "[1]", "[1, 2]", "[1, 3]", "[1, 2, 3]"]


def test_linext(capsys, p3_file):
    _, out, _ = run(capsys, "--json", "linext", "--poset", p3_file)
    assert json.loads(out) == {"descent_counts": [1, 1, 0], "linear_extensions": 2}


def test_series_text(capsys, p3_file):
    _, out, _ = run(capsys, "series", "--poset", p3_file)
    assert "series: (1 + 4*z + 4*z^2 + z^3) / (1 - z)^7" in out


def test_export_toric(capsys, p3_file, tmp_path):
    _, out, _ = run(capsys, "export-toric", "--poset", p3_file, "--which", "G0")
    assert out == "# G0 n=3 ideals=5 binomials=1\nu_1.2*u_1.3 - u_1.2.3*u_1\n"
    target = tmp_path / "g.txt"
    code, out, _ = run(capsys, "export-toric", "--poset", p3_file, "--which", "G", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[1] == "x1*u_0 - y1*u_1"


@pytest.mark.parametrize("kind", ["chain", "antichain", "random"])
@pytest.mark.parametrize("n", [1, 4, 10])
def test_gen_round_trip(capsys, tmp_path, kind, n):
    code, out, _ = run(capsys, "--seed", "11", "gen", "--kind", kind, "--n", str(n), "--density", "0.3")
    assert code == 0
    path = tmp_path / "p.json"
    path.write_text(out)
    code, rep, _ = run(capsys, "--json", "analyze", "--poset", str(path))
    assert code == 0
    rep = json.loads(rep)
    assert rep["n"] == n and len(rep["h_vector"]) == n + 1


def test_deterministic_output(capsys, p3_file):
    outs = {run(capsys, "--seed", "5", "gen", "--kind", "random", "--n", "7")[1] for _ in range(3)}
    assert len(outs) == 1
    outs = {run(capsys, "--json", "analyze", "--poset", p3_file)[1] for _ in range(3)}
    assert len(outs) == 1


def test_timing_is_opt_in(capsys, p3_file):
    _, out, _ = run(capsys, "--json", "--timing", "analyze", "--poset", p3_file)
    assert "timing_ms" in json.loads(out)
    _, out, _ = run(capsys, "--json", "analyze", "--poset", p3_file)
    assert "timing_ms" not in json.loads(out)
