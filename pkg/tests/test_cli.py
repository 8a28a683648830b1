import json

import pytest

from knotpoly.braidrep import BraidWord
from knotpoly.cli import (
    CatalogError,
    LinkEntry,
    Report,
    find_link,
    load_catalog,
    main,
)
from knotpoly.rmatrices import build_catalog_pair

from oracles import conway_alexander


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_trefoil(capsys):
    code, out, _ = run(capsys, "compute", "--invariant", "alexander", "--braid", "strands=2; 1 1 1")
    assert code == 0
    want = conway_alexander(2, (1, 1, 1))
    assert out.strip() == want.to_string(True)


def test_compute_unknot_lambda1(capsys):
    code, out, _ = run(capsys, "compute", "--invariant", "lambda1", "--braid", "strands=1;")
    assert (code, out.strip()) == (0, "1")


def test_compute_hopf_sl3_json(capsys):
    code, out, _ = run(capsys, "compute", "--invariant", "sl3", "--braid", "strands=2; 1 1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["components"] == 2
    assert obj["display"] == "t1^-2*t2^-2 - t1^-2 - t2^-2 + 2 - t2^2 - t1^2 + t1^2*t2^2"
    assert obj["context"]["names"] == ["t1", "t2"]


def test_compute_reads_braid_file(tmp_path, capsys):
    p = tmp_path / "fig8.braid"
    p.write_text('{"strands": 3, "letters": [1, -2, 1, -2]}')
    code, out, _ = run(capsys, "compute", "--invariant", "alexander", "--braid", str(p))
    assert code == 0
    assert out.strip() == conway_alexander(3, (1, -2, 1, -2)).to_string(True)


@pytest.mark.parametrize("argv", [
    ["compute", "--invariant", "alexander", "--braid", "strands=2; 5"],
    ["compute", "--invariant", "nope", "--braid", "strands=2; 1"],
    ["verify", "theorem2", "--link", "no-such-link"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("knotpoly:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "everything"])
    assert exc.value.code == 2


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--json")
    assert code == 0
    names = [e["name"] for e in json.loads(out)["links"]]
    assert names[:4] == ["unknot", "unlink2", "hopf", "trefoil"]


def test_show_matrix(capsys):
    code, out, _ = run(capsys, "show-matrix", "alexander")
    assert code == 0
    assert "h = diag(t^(1/2), -t^(1/2))" in out


def test_verify_axioms_json(capsys):
    code, out, _ = run(capsys, "verify", "axioms", "--matrix", "alexander", "--matrix", "v1", "--json")
    assert code == 0
    rep = json.loads(out)["reports"][0]
    assert rep["pass"] and len(rep["checks"]) == 12


def test_verify_matrix_file(tmp_path, capsys):
    E = build_catalog_pair("lambda1")
    p = tmp_path / "pair.json"
    p.write_text(json.dumps({"name": "mine", "R": E.R.to_json(), "h": E.h.to_json()}))
    code, out, _ = run(capsys, "verify", "axioms", "--matrix-file", str(p))
    assert code == 0
    assert "mine yang-baxter" in out
    p.write_text(json.dumps({"R": E.R.to_json(), "h": E.h.scale(-1).scale(E.h.get((1,), (1,))).to_json()}))
    code, _, _ = run(capsys, "verify", "axioms", "--matrix-file", str(p))
    assert code == 1


def test_verify_is_deterministic(capsys):
    args = ("verify", "skein", "--samples", "5", "--seed", "7", "--json")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
    assert first[0] == 0


def test_verify_theorem2_one_link(capsys):
    code, out, _ = run(capsys, "verify", "theorem2", "--link", "trefoil")
    assert code == 0
    assert "2/2 passed" in out


def test_catalog_validation():
    assert [e.name for e in load_catalog()][-1] == "hopf#trefoil"
    with pytest.raises(CatalogError):
        load_catalog([LinkEntry("bad", BraidWord(3, (1, 1, 2, 2)), 2)])
    assert find_link("Figure-Eight").braid == BraidWord(3, (1, -2, 1, -2))


@pytest.mark.parametrize("entry", [e for e in load_catalog() if e.is_knot], ids=lambda e: e.name)
def test_catalog_knots_match_oracle(entry):
    from knotpoly.invariants import alexander

    val = alexander(entry.braid).value
    assert val == conway_alexander(entry.braid.strands, entry.braid.letters, val.ctx)


def test_report_forms_agree():
    rep = Report("demo")
    rep.add("a", True)
    rep.add("b", False, "x != y")
    obj = rep.to_json()
    assert not obj["pass"]
    text = rep.to_text()
    for c in obj["checks"]:
        assert (("[pass] " if c["pass"] else "[FAIL] ") + c["id"]) in text
