import json

import pytest

from seifert_flatten import load_diagram, parse_pd
from seifert_flatten.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "table:figure-eight")
    rep = json.loads(out)
    assert code == 0 and rep["genus"] == 1 and rep["s2"]
    code, out, _ = run(capsys, "info", "table:figure-eight-flat")
    assert json.loads(out)["disjoint_disks"] is True
    code, out, _ = run(capsys, "info", "table:unknot")
    rep = json.loads(out)
    assert rep["genus"] == 0 and rep["s2"] == []


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.pd"
    bad.write_text("X[1,2,3")
    assert run(capsys, "info", str(bad))[0] == 1
    assert run(capsys, "info", str(tmp_path / "missing.pd"))[0] == 1
    assert run(capsys, "info", "table:nope")[0] == 1


def test_flatten_writes_diagram_and_report(tmp_path, capsys):
    out = tmp_path / "flat.pd"
    code, stdout, _ = run(capsys, "flatten", "table:figure-eight", "--step", "--out", str(out))
    rep = json.loads(stdout)
    assert code == 0
    d = parse_pd(out.read_text())
    assert d.n_crossings == rep["crossings_after"] == 8
    assert rep["genus"] == 1 and len(rep["intermediates"]) == rep["n_steps"]
    code, stdout, _ = run(capsys, "info", str(out))
    assert json.loads(stdout)["disjoint_disks"] is True


def test_flatten_trefoil_closure(tmp_path, capsys):
    src = tmp_path / "t.pd"
    assert run(capsys, "gen", "--strands", "2", "--length", "3", "--seed", "7", "--out", str(src))[0] == 0
    code, stdout, _ = run(capsys, "flatten", str(src))
    assert code == 0 and json.loads(stdout)["total_added_crossings"] == 6


def test_flatten_already_flat_is_stable(tmp_path, capsys):
    out = tmp_path / "f.json"
    assert run(capsys, "flatten", "table:figure-eight-flat", "--out", str(out))[0] == 0
    assert load_diagram(out.read_text()) == load_diagram("X[10,2,11,1] X[16,12,1,11] X[13,8,14,9] "
                                                         "X[7,14,8,15] X[6,6,7,5] X[15,4,16,5] "
                                                         "X[12,4,13,3] X[9,2,10,3] outer=0")


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "flat.pd"
    run(capsys, "flatten", "table:figure-eight", "--out", str(out))
    assert run(capsys, "verify", "table:figure-eight", str(out))[0] == 0
    assert run(capsys, "verify", "table:trefoil", "table:unknot")[0] == 3
    assert run(capsys, "verify", "table:trefoil", "table:trefoil")[0] == 0
    assert run(capsys, "verify", "table:figure-eight", str(out), "--limit", "4")[0] == 1


def test_render(tmp_path, capsys):
    out = tmp_path / "f8.svg"
    assert run(capsys, "render", "table:figure-eight", "--circles", "--out", str(out))[0] == 0
    assert out.read_text().count('class="under-gap"') == 4


def test_render_failure_exit(monkeypatch, capsys):
    from seifert_flatten import render

    monkeypatch.setattr(render, "MAX_CROSSINGS", 2)
    assert run(capsys, "render", "table:figure-eight")[0] == 4


def test_gen_determinism_and_budget(tmp_path, capsys):
    a, b = tmp_path / "a.pd", tmp_path / "b.pd"
    for p in (a, b):
        assert run(capsys, "gen", "--strands", "3", "--length", "4", "--seed", "1", "--out", str(p))[0] == 0
    assert a.read_text() == b.read_text()
    assert parse_pd(a.read_text()).n_crossings == 4
    assert run(capsys, "gen", "--strands", "2", "--length", "4", "--seed", "1")[0] == 5


def test_identity_failure_exit(monkeypatch, capsys):
    from seifert_flatten import InternalIdentityError, cli

    def broken(*a, **k):
        raise InternalIdentityError("test identity")

    monkeypatch.setattr(cli, "flatten", broken)
    assert run(capsys, "flatten", "table:trefoil")[0] == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "trefoil")
    assert code == 0 and parse_pd(out).n_crossings == 3
    code, out, _ = run(capsys, "table")
    assert "figure-eight-flat" in out
    assert run(capsys, "table", "granny")[0] == 1


def test_gauss_and_json_inputs(tmp_path, capsys):
    g = tmp_path / "t.gauss"
    g.write_text("O1+ U2+ O3+ U1+ O2+ U3+\n")
    code, out, _ = run(capsys, "info", str(g))
    assert code == 0 and json.loads(out)["crossings"] == 3
    j = tmp_path / "t.json"
    j.write_text(json.dumps({"crossings": [[1, 1, 2, 2]], "outer_face": 0}))
    assert run(capsys, "info", str(j))[0] == 0


def test_outer_override(capsys):
    code, out, _ = run(capsys, "info", "table:figure-eight", "--outer", "3")
    assert code == 0 and "genus" in json.loads(out)


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["gen", "--strands", "2"])
