import json

import pytest

from arrkit.cli import main
from arrkit.logmodule import certificate_from_json, verify_certificate
from arrkit import arrangement as ar


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def braid3_file(tmp_path):
    p = tmp_path / "braid3.arr"
    p.write_text("dim 3\nH 1 -1 0\nH 1 0 -1\nH 0 1 -1\n")
    return str(p)


def test_charpoly(capsys, braid3_file):
    code, out, _ = run(capsys, "charpoly", braid3_file)
    assert code == 0 and out.strip() == "t^3 - 3t^2 + 2t"


def test_freeness_json(capsys):
    code, out, _ = run(capsys, "freeness", "stanley", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["verdict"] == "not_free"
    assert data["witness"] == "restriction exponents (1,5) != (3,3)"


@pytest.mark.parametrize("argv", [["info", "braid4"], ["poincare", "braid3"], ["chambers", "stanley"],
                                  ["fqcount", "braid3", "--q", "7", "--enumerate"], ["hilbert", "boolean3"],
                                  ["hilbert", "boolean2", "--forms", "1"], ["restrict", "stanley", "--ziegler"],
                                  ["addel", "catalan2", "--hyperplane", "0"], ["solomon-terao", "braid3"],
                                  ["chern", "stanley"], ["coxeter", "--ell", "2", "--mult", "3", "--invariant"],
                                  ["catalan", "--n", "2", "verify"], ["curves", "stanley_extended"],
                                  ["curves", "stanley", "--pivot", "0"], ["corpus", "--only", "1"]])
def test_verbs_succeed(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    json.loads(out)


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "chambers", "braid4")
    _, js, _ = run(capsys, "--json", "chambers", "braid4")
    assert int(text) == json.loads(js)["chambers"]


def test_saito_certificate_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "saito", "stanley_extended", "--json")
    assert code == 0
    cert = certificate_from_json(json.loads(out), 3)
    assert verify_certificate(ar.stanley_extended(), cert)
    p = tmp_path / "cert.json"
    p.write_text(out)
    code, out, _ = run(capsys, "saito", "stanley_extended", "--cert", str(p))
    assert code == 0 and "verified" in out
    bad = json.loads(p.read_text())
    bad["basis"][1] = bad["basis"][2]
    p.write_text(json.dumps(bad))
    code, _, err = run(capsys, "saito", "stanley_extended", "--cert", str(p))
    assert code == 1


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "charpoly", "nosuchfixture")[0] == 2
    bad = tmp_path / "bad.arr"
    bad.write_text("dim 2\nH 1 2 3\n")
    assert run(capsys, "charpoly", str(bad))[0] == 2
    assert run(capsys, "chambers", "braid3", "--max-degree", "0")[0] == 2
    assert run(capsys, "freeness", "stanley", "--frobnicate")[0] == 2


def test_computation_failures(capsys):
    assert run(capsys, "fqcount", "braid3", "--q", "6", "--enumerate")[0] == 1
    assert run(capsys, "saito", "stanley")[0] == 1
    assert run(capsys, "fqcount", "braid4", "--q", "7", "--enumerate", "--enum-budget", "10")[0] == 1
    assert run(capsys, "coxeter", "--ell", "5", "--mult", "1", "--invariant", "--projector", "reynolds")[0] == 1


def test_multiplicity_flag(capsys):
    code, out, _ = run(capsys, "hilbert", "boolean2", "--mult", "2,3", "--json")
    assert json.loads(out)["free_shape_exponents"] == [2, 3]
