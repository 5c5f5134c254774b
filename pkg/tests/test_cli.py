import io
import json
from fractions import Fraction

import pytest

from stabsys.cli import BG_NOTES, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_eval_tilted_slope():
    rep = report("eval", "--charge", "tilted", "--class", "0,1,0", "--alpha", "1", "--beta", "2", "--gamma", "3")
    assert rep["results"]["slope"] == "-1"
    assert rep["results"]["charge"] == {"re": "1", "im": "1"}
    assert rep["command"] == "eval" and rep["version"] == "0.1.0"


def test_region_check():
    rep = report("region", "check", "--alpha", "1", "--beta", "2", "--gamma", "7")
    assert rep["results"]["ps"] and rep["results"]["s"]
    assert rep["results"]["t_window"] == ["2", "2"]


def test_orbit():
    rep = report("orbit", "--from", "tilted:1,2,7", "--to", "standard:1")
    assert rep["results"]["equivalent"] is False
    rep = report("orbit", "--from", "standard_beta:1,2", "--to", "standard_beta:1,5")
    assert rep["results"]["witness"] == [["1", "3"], ["0", "1"]]


def test_bg_solve_carries_notes():
    rep = report("bg", "solve", "--alpha", "1", "--beta", "2", "--gamma", "7", "--t", "2")
    assert rep["results"]["u"] == "1" and rep["results"]["A"] == "-3/2"
    assert all(n in rep["warnings"] for n in BG_NOTES)
    rep = report("bg", "solve", "--alpha", "1", "--beta", "2", "--gamma", "8")
    assert rep["results"]["t"] == "13/6"


def test_support_and_bounds():
    rep = report("support", "certify", "--alpha", "1/2", "--bound", "5")
    assert rep["results"]["passed"] and rep["results"]["violations"] == []
    rep = report("bounds", "check", "--class", "2,3,5", "--genus", "0")
    assert rep["results"]["extremal"]["tag"] == "P1Sums"


def test_formal_commands(tmp_path):
    from stabsys.formal import load_bundled

    path = tmp_path / "fx.json"
    path.write_text(json.dumps(load_bundled("two_step").to_json()))
    rep = report("formal", "hn", "--fixture", str(path), "--object", "X", "--alpha", "1")
    assert rep["results"]["factors"] == [[1, 3, 2], [1, 1, 0]]
    rep = report("formal", "scan-minimal", "--alpha", "1", "--beta", "2", "--gamma", "3", "--bound", "10")
    assert rep["results"]["V1"]["solutions"] == []
    assert rep["results"]["OP"]["all_extremal"]


def test_walls_json_csv_svg(tmp_path):
    svg = tmp_path / "w.svg"
    base = ["walls", "scan", "--class=-1,0,-2", "--alpha", "1", "--beta", "3", "--gamma-min", "1", "--gamma-max", "6",
            "--bound", "5"]
    rep = report(*base, "--out", str(svg))
    assert [w["gamma0"] for w in rep["results"]["walls"]] == ["3"]
    assert [c["verdict"] for c in rep["results"]["chambers"]] == ["Unstable", "Stable"]
    assert svg.read_text().count('class="wall"') == 1
    code, out, _ = call(*base, "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["gamma0,n',d',k',monotonicity,kind", "3,0,0,1,Decreasing,Numerical"]
    svg2 = tmp_path / "p.svg"
    rpath = tmp_path / "r.json"
    rpath.write_text(json.dumps(rep))
    assert report("plot", "--report", str(rpath), "--out", str(svg2))["results"]["svg"] == str(svg2)
    assert svg2.read_text() == svg.read_text()


def test_rationals_are_strings():
    rep = report("region", "check", "--alpha", "1", "--beta", "2", "--gamma", "8")

    def walk(x):
        if isinstance(x, float):
            raise AssertionError(x)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)

    walk(rep)
    assert [Fraction(v) for v in rep["results"]["t_window"]] == [2, Fraction(7, 3)]


def test_determinism():
    argv = ["bg", "solve", "--alpha", "2/3", "--beta", "5", "--gamma", "9"]
    assert call(*argv) == call(*argv)


@pytest.mark.parametrize(
    "argv",
    [
        ["region", "check", "--alpha", "0.5", "--beta", "2", "--gamma", "7"],
        ["bg", "solve", "--alpha", "1", "--beta", "2", "--gamma", "6"],
        ["eval", "--charge", "tilted", "--class", "0,1,0", "--alpha", "1"],
        ["formal", "hn", "--fixture", "/nonexistent.json", "--object", "X", "--alpha", "1"],
    ],
)
def test_domain_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [["frobnicate"], ["region", "check", "--bogus"], []])
def test_usage_errors_exit_2(argv, capsys):
    code, _, _ = call(*argv)
    assert code == 2


def test_report_round_trip():
    from stabsys.regions import bg_solve

    rep = report("bg", "solve", "--alpha", "2/3", "--beta", "5", "--gamma", "9", "--t", "1/3")
    bg = bg_solve(Fraction(2, 3), 5, 9, Fraction(1, 3))
    for name in ("p", "q", "u", "A", "B", "C", "D", "E", "F"):
        assert Fraction(rep["results"][name]) == getattr(bg, name)
    assert json.loads(json.dumps(rep, sort_keys=True)) == rep
