import json
import subprocess
import sys

import pytest

from kextremal.cli import main
from kextremal.constructions import JoinCertificate, complete, hajos_bijoin, replay
from kextremal.digraph import Digraph, from_text, to_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, d):
    path = tmp_path / name
    path.write_text(to_text(d))
    return str(path)


def test_gen_complete(capsys):
    code, out, _ = run(capsys, "gen", "complete:5")
    assert code == 0
    d = from_text(out)
    assert d == complete(5) and d.m == 20


def test_gen_bad_specs(capsys):
    for spec in ("wheel:0", "complete:x", "nothing", "random:2,1,1", "cube:3"):
        assert run(capsys, "gen", spec)[0] == 2


def test_gen_random_is_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "gen", "random:3,2,42", "--out", str(a))[0] == 0
    assert run(capsys, "gen", "random:3,2,42", "--out", str(b), "--cert", str(b) + ".json")[0] == 0
    assert a.read_text() == b.read_text()
    cert = JoinCertificate.from_json((tmp_path / "a.txt.cert.json").read_text())
    assert replay(cert) == from_text(a.read_text())


def test_check_exit_codes(tmp_path, capsys):
    code, out, _ = run(capsys, "check", write(tmp_path, "k5.txt", complete(5)), "--k", "4")
    assert code == 0 and "EXTREMAL" in out
    bij, _ = hajos_bijoin(complete(4), 0, 1, 2, complete(4), 0, 1, 2)
    code, out, _ = run(capsys, "check", write(tmp_path, "bij.txt", bij), "--k", "3", "--format", "json")
    report = json.loads(out)
    assert code == 1 and report["chi"] == 3 and not report["extremal"]
    assert run(capsys, "check", write(tmp_path, "big.txt", Digraph(30, [(i, i + 1) for i in range(29)])))[0] == 3


def test_check_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("d 2 1\na 0 5\n")
    assert run(capsys, "check", str(bad))[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing.txt"))[0] == 2


def test_recognize(tmp_path, capsys):
    path = tmp_path / "m.txt"
    run(capsys, "gen", "random:3,3,5,16", "--out", str(path))
    code, out, _ = run(capsys, "recognize", str(path), "--k", "3")
    assert code == 0
    assert replay(JoinCertificate.from_json(out)) == from_text(path.read_text())
    k5_minus = complete(5).remove_arcs([(0, 1)])
    code, out, _ = run(capsys, "recognize", write(tmp_path, "k5m.txt", k5_minus), "--k", "4")
    assert code == 1 and out.strip() == "NOT-EXTREMAL"
    assert run(capsys, "recognize", str(path), "--k", "2")[0] == 2


def test_recognize_timeout(capsys):
    code, out, _ = run(capsys, "recognize", "random:3,8,1", "--k", "3", "--timeout", "0.01")
    assert code == 4 and "TIMEOUT" in out


def test_lambda_and_chroma(capsys):
    code, out, _ = run(capsys, "lambda", "wheel:2", "--format", "json")
    assert code == 0 and json.loads(out)["lambda"] == 3
    code, out, _ = run(capsys, "lambda", "wheel:2", "--source", "0", "--target", "1", "--format", "json")
    data = json.loads(out)
    assert data["lambda"] == 3 and len(data["cut"]) == 3
    assert run(capsys, "lambda", "wheel:2", "--source", "0")[0] == 2
    code, out, _ = run(capsys, "chroma", "wheel:2", "--format", "json")
    assert code == 0 and json.loads(out)["chi"] == 4
    assert run(capsys, "chroma", "wheel:2", "--k", "3")[0] == 1
    assert run(capsys, "chroma", "wheel:2", "--k", "0")[0] == 2


def test_hyper_and_convert(tmp_path, capsys):
    code, out, _ = run(capsys, "hyper", "complete:3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["hyperedges"] == [[0, 1], [0, 2], [1, 2]]
    assert data["chromatic_number"] == 3 and data["pairwise_intersection_ok"]
    code, out, _ = run(capsys, "convert", "dicycle:3", "--to", "dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "convert", "dicycle:3", "--to", "json")
    js = tmp_path / "c.json"
    js.write_text(out)
    code, out, _ = run(capsys, "convert", str(js))
    assert from_text(out) == Digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.mark.parametrize("claim", ["fig2-valid", "fig2-invalid", "fig4-bijoin", "fig6-join", "fig10-hyper"])
def test_repro_claims_pass(capsys, claim):
    code, out, _ = run(capsys, "repro", claim, "--format", "json")
    assert code == 0
    assert json.loads(out)["results"][0]["passed"]


def test_repro_reports_expected_values(capsys):
    _, out, _ = run(capsys, "repro", "fig2-valid")
    assert "chi: expected 4, computed 4" in out and "lambda: expected 3, computed 3" in out
    _, out, _ = run(capsys, "repro", "fig2-invalid")
    assert "lambda: expected 4, computed 4" in out
    assert run(capsys, "repro", "fig99")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "x", "--k", "notanint")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kextremal", "gen", "dicycle:4"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.startswith("d 4 4")
