import csv
import io
import json

import numpy as np
import pytest

from littlegroup.cli import algebra_relations, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_algebra_check(capsys):
    code, doc, _ = run_json(capsys, "algebra-check")
    assert code == 0
    assert doc["schema_version"] == "1"
    assert doc["command"] == "algebra-check"
    rel = doc["results"]["relations"]
    assert "[J1,J2]=iJ3" in rel and "[K1,K2]=-iJ3" in rel and "[J3,N1]=iN2" in rel
    assert all(v == 0.0 for v in rel.values())
    assert len(rel) == len(algebra_relations()) == 3 + 3 + 9 + 3


def test_little_group_massive(capsys):
    code, doc, _ = run_json(capsys, "little-group", "--p", "0", "0", "0", "1")
    assert code == 0
    assert doc["results"]["class"] == "Massive"
    assert list(doc["results"]["generators"]) == ["J1", "J2", "J3"]
    assert doc["results"]["invariance_deviation"] <= 1e-12


def test_little_group_massless(capsys):
    code, doc, _ = run_json(capsys, "little-group", "--p", "0", "0", "1", "1")
    assert code == 0
    assert doc["results"]["class"] == "Massless"
    gens = doc["results"]["generators"]
    assert list(gens) == ["J3", "N1", "N2"]
    n1 = np.array(gens["N1"]["real"]) + 1j * np.array(gens["N1"]["imag"])
    assert n1[0, 2] == -1j and n1[0, 3] == 1j


def test_little_group_seed_changes_parameters(capsys):
    _, a, _ = run_json(capsys, "little-group", "--p", "0", "0", "1", "1")
    _, b, _ = run_json(capsys, "little-group", "--p", "0", "0", "1", "1", "--seed", "7")
    assert a["results"]["parameters"] != b["results"]["parameters"]


def test_little_group_tachyonic(capsys):
    code, out, err = run(capsys, "little-group", "--p", "0", "0", "2", "1")
    assert code == 2
    assert out == ""
    assert "tachyonic: unsupported" in err


def test_gauge(capsys):
    code, doc, _ = run_json(capsys, "gauge", "--u", "1", "--v", "0", "--A", "1", "0", "0.5", "0.5")
    assert code == 0
    assert doc["results"]["A"] == [1.0, 0.0, 1.5, 1.5]
    assert doc["results"]["shift"] == 1.0
    code, doc, _ = run_json(capsys, "gauge", "--u", "0", "--v", "0", "--A", "0.2", "0.3", "0.7", "0.7")
    assert doc["results"]["A"] == [0.2, 0.3, 0.7, 0.7]


def test_gauge_condition_violated(capsys):
    code, out, err = run(capsys, "gauge", "--A", "1", "0", "0.5", "0.4")
    assert code == 2 and out == "" and "Lorentz condition" in err


def test_contract(capsys):
    code, doc, _ = run_json(capsys, "contract", "--etas", "2,3,4,5,6")
    assert code == 0
    assert -2.1 <= doc["results"]["fitted_decay_rate"] <= -1.9
    code, doc, _ = run_json(capsys, "contract", "--etas", "10")
    assert code == 0
    assert max(doc["results"]["deviations_n1"] + doc["results"]["deviations_n2"]) <= 1e-8


@pytest.mark.parametrize("etas", ["5,4", "1,1", "a,b", "-1,2", ""])
def test_contract_bad_lists(capsys, etas):
    code, _, _ = run(capsys, "contract", "--etas", etas)
    assert code == 2


def test_wavefunction_csv_center(capsys):
    code, out, _ = run(capsys, "wavefunction", "--eta", "0", "--n", "3", "3", "--format", "csv")
    assert code == 0
    assert out.endswith("\n") and "\r" not in out
    lines = out.splitlines()
    assert lines[0] == "axis1,axis2,amplitude"
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert len(rows) == 9
    assert float(rows[4][2]) == pytest.approx(0.56419, abs=1e-5)
    assert float(rows[4][0]) == 0.0 and float(rows[4][1]) == 0.0


def test_wavefunction_csv_json_agree(capsys):
    args = ["wavefunction", "--eta", "1.3", "--space", "momentum", "--n", "7", "5"]
    _, out_csv, _ = run(capsys, *args, "--format", "csv")
    _, doc, _ = run_json(capsys, *args, "--format", "json")
    flat = [float(r[2]) for r in csv.reader(io.StringIO(out_csv.split("\n", 1)[1]))]
    # both print shortest round-trip decimals, so values match exactly
    assert flat == [v for row in doc["results"]["values"] for v in row]
    assert doc["results"]["axes"] == ["q_z", "q_0"]


def test_wavefunction_eta0_circular(capsys):
    _, doc, _ = run_json(capsys, "wavefunction", "--eta", "0", "--n", "21", "21")
    v = np.array(doc["results"]["values"])
    assert np.allclose(v, v.T) and np.allclose(v, v[::-1, :])


def test_wavefunction_eta2_concentrated_on_diagonal(capsys):
    _, doc, _ = run_json(
        capsys, "wavefunction", "--eta", "2", "--space", "position", "--window", "0", "0", "4", "4", "--n", "41", "41"
    )
    v = np.array(doc["results"]["values"])
    assert np.trace(v) > 10 * np.trace(v[:, ::-1])


@pytest.mark.parametrize("window", [["0", "0", "0", "1"], ["0", "0", "-1", "1"]])
def test_wavefunction_bad_window(capsys, window):
    code, _, _ = run(capsys, "wavefunction", "--window", *window)
    assert code == 2


def test_wavefunction_bad_n(capsys):
    code, _, _ = run(capsys, "wavefunction", "--n", "1", "5")
    assert code == 2


def test_parton_report(capsys):
    code, doc, _ = run_json(capsys, "parton-report", "--energy", "900", "--mass", "0.938")
    assert code == 0
    assert doc["results"]["interaction_ratio"] == pytest.approx(2.7e-7, rel=0.01)
    code, doc, _ = run_json(capsys, "parton-report", "--energy", "1", "--mass", "1")
    r = doc["results"]
    assert r["gamma"] == r["period_dilation"] == r["interaction_ratio"] == 1.0


def test_parton_report_invalid(capsys):
    code, out, _ = run(capsys, "parton-report", "--energy", "0.5", "--mass", "1")
    assert code == 2 and out == ""


@pytest.mark.parametrize("argv", [
    ["gauge", "--bogus", "1", "--A", "0", "0", "0", "0"],
    ["no-such-command"],
    [],
    ["little-group"],
    ["parton-report", "--energy", "abc"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "littlegroup", "algebra-check"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["results"]["passed"] is True
