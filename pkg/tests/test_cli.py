import os
import subprocess
import sys

import pytest

from scstar.cli import main
from scstar.textio import format_dfa, parse_dfa
from scstar.witnesses import witness

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


@pytest.fixture
def files(tmp_path, even_a, a_plus, sigma_star):
    out = {}
    for name, d in (("even", even_a), ("aplus", a_plus), ("sigma", sigma_star)):
        p = tmp_path / f"{name}.dfa"
        p.write_text(format_dfa(d))
        out[name] = str(p)
    return out


def test_pipeline_plus_and_star(files, capsys):
    assert main(["pipeline", files["even"]]) == 0
    assert "D3min: 2" in capsys.readouterr().out
    assert main(["pipeline", files["even"], "--variant", "star"]) == 0
    out = capsys.readouterr().out
    assert "D3min: 1" in out and "L+c+ min: 2" in out
    assert main(["pipeline", files["sigma"]]) == 0
    assert "D3min: 1" in capsys.readouterr().out


def test_pipeline_csv_and_dot(files, capsys):
    assert main(["pipeline", files["even"], "--csv", "--dot"]) == 0
    out = capsys.readouterr().out
    assert "D3min,2" in out and "digraph" in out


def test_pipeline_emit_stages(files, tmp_path, capsys):
    out_dir = tmp_path / "stages"
    assert main(["pipeline", files["even"], "--emit-stages", str(out_dir)]) == 0
    names = set(os.listdir(out_dir))
    for stage in ("N1.nfa", "D1.dfa", "D2.dfa", "N3.nfa", "D3.dfa", "D3min.dfa", "D3.labels"):
        assert stage in names
    assert (out_dir / "D3.labels").read_text().splitlines()[0] == "0 {0}"
    assert parse_dfa((out_dir / "D3min.dfa").read_text()).state_count == 2


def test_pipeline_errors(tmp_path, capsys):
    bad = tmp_path / "bad.dfa"
    bad.write_text("states 2\nalphabet a\ninitial 0\nfinal 0\n0 a 1\n0 q 1\n")
    assert main(["pipeline", str(bad)]) == 2
    assert "unknown symbol 'q'" in capsys.readouterr().err
    assert main(["pipeline", str(tmp_path / "missing.dfa")]) == 2
    p = tmp_path / "w.dfa"
    p.write_text(format_dfa(witness("combined", 6)))
    assert main(["pipeline", str(p), "--cap", "5"]) == 3


def test_state_cap_env(tmp_path, monkeypatch, capsys):
    p = tmp_path / "w.dfa"
    p.write_text(format_dfa(witness("combined", 6)))
    monkeypatch.setenv("SCS_STATE_CAP", "5")
    assert main(["pipeline", str(p)]) == 3


def test_witness_command(tmp_path, capsys):
    out = tmp_path / "r5.dfa"
    assert main(["witness", "reach", "5", "--out", str(out)]) == 0
    d = parse_dfa(out.read_text())
    assert d.state_count == 5 and d.alphabet == tuple("abcd") and d.finals == {0, 1}
    assert "alphabet: a b c d" in capsys.readouterr().out
    assert main(["witness", "combined", "6"]) == 0
    d = parse_dfa(capsys.readouterr().out)
    assert d.alphabet == tuple("abcdefg") and d.state_count == 6
    assert main(["witness", "dist", "4"]) == 2
    assert "n >= 5" in capsys.readouterr().err


@pytest.mark.parametrize("report", ["reach", "separate"])
def test_witness_reports(report, capsys):
    assert main(["witness", "combined", "6", "--report", report]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.endswith(("ok", "fail"))]
    assert lines and all(l.endswith(" ok") for l in lines)
    assert len(lines) == (17 if report == "reach" else 8)


def test_bounds_command(capsys):
    assert main(["bounds", "--max-n", "5", "--csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,f,a072597,crude,dedekind,estimate,ratio"
    assert lines[5].startswith("5,2300,2301,2016840,7581,")
    assert main(["bounds", "--max-n", "3"]) == 0
    assert "a072597" in capsys.readouterr().out


def test_search_command(tmp_path, capsys):
    ck = tmp_path / "ck"
    assert main(["search", "--n", "2", "--k", "1", "--resume", str(ck)]) == 0
    out = capsys.readouterr().out
    assert "max_sc: 2" in out
    assert ck.exists()
    assert main(["search", "--n", "2", "--k", "1", "--resume", str(ck)]) == 0
    assert capsys.readouterr().out == out


def test_orbit_command(files, capsys):
    assert main(["orbit", files["aplus"]]) == 0
    out = capsys.readouterr().out
    assert [l.split()[-1] for l in out.splitlines()[:5]] == ["2"] * 5
    assert main(["orbit", files["sigma"], "--csv"]) == 0
    assert capsys.readouterr().out.split() == ["L,1", "L+,1", "Lc+,1", "L+c+,1", "Lc+c+,1"]


def test_verify_small(capsys):
    assert main(["verify", "--n-max", "3", "--samples", "10", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "seed=7" in out and "FAIL" not in out


def test_module_entry_point():
    path = os.path.join(DATA, "even_a.dfa")
    proc = subprocess.run([sys.executable, "-m", "scstar", "pipeline", path],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "D3min: 2" in proc.stdout


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["search", "--n", "2"])
    assert info.value.code == 2
