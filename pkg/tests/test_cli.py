import json

import pytest

from dpva.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_catalog_verbs(capsys):
    code, out = run(capsys, "catalog", "list")
    assert code == 0 and "toda.h1" in out
    code, out = run(capsys, "catalog", "show", "toda.h1")
    assert code == 0 and "K[1,2] = (u)*S^1 + (-u)" in out
    assert run(capsys, "catalog", "show", "nosuch")[0] == 2


def test_check_verbs(capsys, tmp_path):
    assert run(capsys, "check", "skew", "toda.h2") == (0, "skewadjoint: pass\n")
    assert run(capsys, "check", "ham", "rv.h2")[0] == 0
    code, out = run(capsys, "check", "ham", "broken.h0", "--fast11")
    assert code == 1 and "cond3" in out
    path = tmp_path / "op.json"
    run(capsys, "catalog", "show", "toda.h1", "--json")
    code, out = run(capsys, "catalog", "show", "toda.h1", "--json")
    path.write_text(out)
    assert json.loads(out)["components"] == ["u", "v"]
    assert run(capsys, "check", "ham", str(path))[0] == 0


def test_bracket_lines(capsys):
    code, out = run(capsys, "bracket", "toda.h1", "u", "v")
    assert code == 0
    assert out.splitlines() == ["-u[-1] @ l^-1", "u @ l^0"]


def test_schouten_compat_poisson(capsys):
    code, out = run(capsys, "schouten", "$u", "$v")
    assert code == 0 and out.strip() == "int(0)"
    assert run(capsys, "compat", "toda.h1", "toda.h2")[0] == 0
    assert run(capsys, "compat", "toda.h1", "v2.h2")[0] == 1
    assert run(capsys, "poisson", "broken.h0")[0] == 1


def test_reduce(capsys):
    code, out = run(capsys, "reduce", "$u*$v[1] - $u[-1]*$v")
    assert code == 0 and "rep: 0" in out
    assert run(capsys, "reduce", "u")[0] == 2


def test_trivialize_and_solve(capsys):
    code, out = run(capsys, "trivialize", "--base", "toda.h1", "--target", "toda.h2", "--window", "0..0", "--maxdeg", "2")
    assert code == 0 and "alpha: 0" in out and "nullity: 2" in out
    code, out = run(capsys, "solve", "--base", "toda.h1", "--target", "br.h2", "--window", "-1..1", "--maxdeg", "2")
    assert code == 0 and "X[v]:" in out
    code, out = run(capsys, "trivialize", "--base", "toda.h0", "--target", "ul.p0", "--no-ul", "--window", "-1..1", "--maxdeg", "3")
    assert code == 1 and "no solution" in out


def test_bad_window():
    with pytest.raises(SystemExit):
        main(["solve", "--base", "toda.h1", "--target", "toda.h2", "--window", "3"])


def test_accept_filter(capsys):
    code, out = run(capsys, "accept", "--filter", "cohomology")
    assert code == 0
    assert out.count("[PASS]") == 1 and "cohomology" in out
