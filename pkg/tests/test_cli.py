import json

import pytest

from graphnorm.cli import main
from graphnorm.graph import Block, DecoratedGraph, TorusGluing, family_p, from_document, to_document
from graphnorm.graph import validate_structure


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p111_file(tmp_path):
    return write(tmp_path, "p111.json", to_document(family_p(1, 1, 1)))


def test_validate_p111(capsys, p111_file):
    code, out, _ = run(capsys, "validate", p111_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["structure"]["composite"] is True
    assert rep["classification"]["type"] == "COMPOSITE"


def test_validate_not_composite(capsys, tmp_path):
    g = DecoratedGraph((Block("A", 0, 2),),
                       (TorusGluing("T", ("A", 0), ("A", 1), ((1, 0), (1, 1))),))
    code, out, _ = run(capsys, "validate", write(tmp_path, "g.json", to_document(g)))
    assert code == 1
    assert json.loads(out)["classification"]["reasons"] == ["NONNEGATIVE_CHI"]


def test_validate_schema_error(capsys, tmp_path):
    doc = to_document(family_p(1, 1, 1))
    doc["tori"][1]["gluing"] = [[2, 0], [1, 1]]
    code, out, err = run(capsys, "validate", write(tmp_path, "bad.json", doc))
    assert code == 2 and out == ""
    e = json.loads(err)
    assert e["error"] == "SCHEMA_ERROR"
    assert "gluing not unimodular" in e["message"]
    assert e["field"] == "$.tori[1].gluing"


def test_validate_parse_error(capsys, tmp_path):
    text = json.dumps(to_document(family_p(1, 1, 1)), indent=1)[:-40]
    code, _, err = run(capsys, "validate", write(tmp_path, "trunc.json", text))
    e = json.loads(err)
    assert code == 2 and e["error"] == "PARSE_ERROR"
    assert e["line"] >= 1 and e["column"] >= 1


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "nope.json"))
    assert code == 2 and json.loads(err)["error"] == "USAGE_ERROR"


def test_invariants_p111(capsys, p111_file):
    code, out, _ = run(capsys, "invariants", p111_file, "--sigma", "fibres=1,1", "--d", "3")
    assert code == 0
    rep = json.loads(out)
    assert rep["thurston"] == 2 and rep["torsion_width"] == 2 and rep["equal"] is True
    assert rep["engine_agrees"] is True
    assert rep["h1"] == {"free_rank": 3, "torsion": [3], "b1": 3, "labels": rep["h1"]["labels"]}
    assert rep["status"] == "UNVALIDATED"
    assert rep["d"] == 3


def test_invariants_with_class(capsys, p111_file):
    # class vector on the 8 generators: fibres 1, every other value 0
    code, out, _ = run(capsys, "invariants", p111_file, "--sigma", "class=0,0,1,0,0,1,0,0")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "VALIDATED" and rep["equal"]
    assert rep["character"]["validated"] is True and rep["d"] == 2


def test_invariants_bad_class(capsys, p111_file):
    code, _, err = run(capsys, "invariants", p111_file, "--sigma", "class=0,0,1,0,0,0,0,0")
    assert code == 1 and json.loads(err)["error"] == "VALIDATION_ERROR"


def test_invariants_not_coprime(capsys, tmp_path):
    path = write(tmp_path, "g.json", to_document(family_p(2, 1, 1)))
    code, _, err = run(capsys, "invariants", path, "--sigma", "fibres=1,1", "--d", "4")
    e = json.loads(err)
    assert code == 1 and e["error"] == "NOT_COPRIME"
    assert e["suggested_d"] == 3 and e["tori"] == ["T1"]


def test_invariants_not_composite(capsys, tmp_path):
    g = DecoratedGraph((Block("A", 0, 2),),
                       (TorusGluing("T", ("A", 0), ("A", 1), ((1, 0), (1, 1))),))
    code, _, err = run(capsys, "invariants", write(tmp_path, "g.json", to_document(g)),
                       "--sigma", "fibres=1")
    assert code == 1 and json.loads(err)["error"] == "NOT_COMPOSITE"


@pytest.mark.parametrize("sigma", ["fibres=1", "oops=1,1", "fibres=a,b"])
def test_invariants_bad_sigma(capsys, p111_file, sigma):
    code, _, err = run(capsys, "invariants", p111_file, "--sigma", sigma)
    assert code == 2 and json.loads(err)["error"] == "USAGE_ERROR"


def test_bundle_rhs(capsys, p111_file):
    code, out, _ = run(capsys, "bundle", p111_file, "--sigma", "fibres=1,1",
                       "--self-intersection", "-4")
    rep = json.loads(out)
    assert code == 0 and rep["rhs"] == 6 and rep["gate"] == {"b1": 3, "ok": True}


def test_bundle_cancellation(capsys, tmp_path, p111_file):
    sw = {"group": {"free_rank": 2, "torsion": []}, "support": [[[0, 0], 1], [[1, 0], -1]]}
    swp = write(tmp_path, "sw.json", sw)
    code, out, _ = run(capsys, "bundle", p111_file, "--sigma", "fibres=1,1",
                       "--self-intersection", "-4", "--sw", swp, "--euler", "1,0",
                       "--gamma", "0,1", "--chi-candidate", "5", "--m", "2")
    rep = json.loads(out)
    assert code == 0
    assert set(rep["sw"]["sums"].values()) == {0}
    assert rep["sw"]["separating_k"] == 1 and rep["sw"]["restored"] is True
    assert rep["certificate"]["verdict"] == "REFUTED" and rep["certificate"]["witness"] == 3


def test_bundle_torsion_loop(capsys, tmp_path, p111_file):
    sw = {"group": {"free_rank": 1, "torsion": [2]}, "support": [[[0, 0], 1]]}
    swp = write(tmp_path, "sw.json", sw)
    code, _, err = run(capsys, "bundle", p111_file, "--sigma", "fibres=1,1",
                       "--self-intersection", "0", "--sw", swp, "--euler", "1,0",
                       "--gamma", "0,1")
    assert code == 1 and json.loads(err)["error"] == "TORSION_LOOP"


def test_corpus_deterministic(capsys, monkeypatch):
    monkeypatch.delenv("GRAPHNORM_SEED", raising=False)
    _, a, _ = run(capsys, "corpus", "--blocks", "2", "--seed", "7", "--count", "5")
    _, b, _ = run(capsys, "corpus", "--blocks", "2", "--seed", "7", "--count", "5")
    assert a == b and len(a.splitlines()) == 5
    for line in a.splitlines():
        doc = json.loads(line)
        g = from_document(doc)
        assert validate_structure(g).composite
        assert to_document(g) == doc


def test_corpus_env_seed(capsys, monkeypatch):
    _, a, _ = run(capsys, "corpus", "--blocks", "3", "--seed", "11")
    monkeypatch.setenv("GRAPHNORM_SEED", "11")
    _, b, _ = run(capsys, "corpus", "--blocks", "3", "--seed", "0")
    assert a == b


def test_corpus_usage(capsys):
    code, _, err = run(capsys, "corpus", "--blocks", "1")
    assert code == 2 and json.loads(err)["error"] == "USAGE_ERROR"


def test_no_subcommand(capsys):
    code, _, err = run(capsys)
    assert code == 2 and json.loads(err)["error"] == "USAGE_ERROR"


def test_pretty(capsys, p111_file):
    _, out, _ = run(capsys, "validate", p111_file, "--pretty")
    assert out.startswith("{\n  ")
