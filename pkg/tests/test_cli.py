import csv
import io
import json
import subprocess
import sys

import pytest

from su2mvop import cli
from su2mvop.cli import RunConfig, main, parse_ell, poly_str, run
from su2mvop.scalars import half


def invoke(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_weight_l1_entry(capsys):
    code, out, _ = invoke(["weight", "--ell", "1", "--basis", "monomial", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == 1
    assert doc["config"]["ell"] == "1" and doc["config"]["precision_bits"] == 256
    assert doc["result"]["entries"][0][0] == ["3"]
    assert doc["result"]["display"][0] == ["3", "3*x", "4*x^2 - 1"]


def test_poly_half_monic(capsys):
    code, out, _ = invoke(["poly", "--ell", "0.5", "--degree", "1", "--monic"], capsys)
    res = json.loads(out)["result"]
    assert code == 0
    assert res["display"] == [["x", "-1/4"], ["-1/4", "x"]]
    assert res["coefficient_matrices"] == [[["0", "-1/4"], ["-1/4", "0"]], [["1", "0"], ["0", "1"]]]


def test_identities_all_pass(capsys):
    code, out, _ = invoke(["identities", "--suite", "cor-a2", "--max", "6"], capsys)
    res = json.loads(out)["result"]
    assert code == 0
    text = json.dumps(res)
    assert '"counterexamples": []' in text


def test_deterministic_bytes(capsys):
    argv = ["examples", "--ell", "1", "--norms", "2"]
    _, a, _ = invoke(argv, capsys)
    _, b, _ = invoke(argv, capsys)
    assert a == b and a


def test_half_integer_syntax_equivalent(capsys):
    _, a, _ = invoke(["weight", "--ell", "3/2"], capsys)
    _, b, _ = invoke(["weight", "--ell", "1.5"], capsys)
    assert a == b


def test_csv_has_header(capsys):
    code, out, _ = invoke(["poly", "--ell", "1", "--recurrence", "2", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0][0] == "d" and rows[0][1] == "Bt_00"
    assert [r[0] for r in rows[1:]] == ["0", "1", "2"]


def test_csv_norm_table_flags(capsys):
    _, out, _ = invoke(["examples", "--ell", "1", "--norms", "0", "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    flagged = [r for r in rows if r["paper_mismatch"] == "true"]
    assert flagged and json.loads(flagged[0]["computed"]) == {"coeff": "9/8", "pi_power": 1}
    assert json.loads(flagged[0]["printed"]) == {"coeff": "9/16", "pi_power": 1}


def test_out_file(tmp_path, capsys):
    target = tmp_path / "w.json"
    code, out, _ = invoke(["weight", "--ell", "1/2", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["config"]["ell"] == "1/2"
    # --out does not enter the config, so the bytes match stdout
    _, out2, _ = invoke(["weight", "--ell", "1/2"], capsys)
    assert target.read_text() == out2


@pytest.mark.parametrize("argv", [
    ["weight", "--ell", "1/3"],
    ["weight", "--ell", "-1"],
    ["weight"],
    ["poly", "--ell", "1", "--monic", "--recurrence", "2"],
    ["examples", "--ell", "1"],
    ["diffop", "--ell", "1", "--op", "X"],
    ["nonsense"],
])
def test_argparse_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["poly", "--ell", "1"],
    ["poly", "--ell", "1", "--degree", "-1"],
    ["weight", "--ell", "1", "--precision-bits", "8"],
    ["weight", "--ell", "1", "--jobs", "0"],
    ["examples", "--ell", "1/2", "--rodrigues", "2"],
    ["diffop", "--ell", "0", "--op", "E"],
])
def test_semantic_usage_errors(argv, capsys):
    code, out, err = invoke(argv, capsys)
    assert code == 2 and out == "" and "error" in err


def test_exactness_violation_exit_3(monkeypatch, capsys):
    def boom(cfg):
        raise ArithmeticError("inexact value reached an exact pipeline")
    monkeypatch.setitem(cli.COMMANDS, "weight", boom)
    code, out, err = invoke(["weight", "--ell", "1"], capsys)
    assert code == 3 and "exactness" in err


def test_exactness_from_scalar_addition(monkeypatch, capsys):
    from su2mvop.scalars import SqrtRat

    def mixed(cfg):
        return SqrtRat(1, 2) + SqrtRat(1, 3), None, 0
    monkeypatch.setitem(cli.COMMANDS, "weight", mixed)
    assert invoke(["weight", "--ell", "1"], capsys)[0] == 3


def test_verify_all_subset(capsys):
    code, out, err = invoke(["verify-all", "--ell", "0,1/2,1", "--suite", "spherical-orthogonality",
                             "--suite", "commutant", "--no-timing"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert [s["suite"] for s in doc["result"]["suites"]] == ["spherical-orthogonality", "commutant"]
    assert doc["config"]["ells"] == ["0", "1/2", "1"]
    assert "wall_time" not in out
    assert "pass] spherical-orthogonality: 84 pass, 0 fail" in err


def test_verify_all_inject_fault(capsys):
    code, out, err = invoke(["verify-all", "--ell", "1", "--suite", "weight-reproduction", "--suite", "commutant",
                             "--inject-fault"], capsys)
    assert code == 1
    assert json.loads(out)["result"]["failed_suites"] == ["weight-reproduction"]
    assert "FAILED suites: weight-reproduction" in err


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = invoke(["verify-all", "--suite", "nope"], capsys)
    assert code == 2


def test_run_config_defaults():
    cfg = RunConfig(command="weight", ell=half(1))
    assert cfg.precision_bits == 256 and cfg.dmax == 6
    assert run(cfg, stdout=io.StringIO()) == 0


def test_parse_ell_and_poly_str():
    assert parse_ell("1.5") == parse_ell("3/2") == half("3/2")
    from su2mvop.polynomials import Poly
    assert poly_str(Poly([-1, 0, 4])) == "4*x^2 - 1"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "su2mvop", "poly", "--ell", "1/2", "--degree", "0", "--monic"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["display"] == [["1", "0"], ["0", "1"]]
    bad = subprocess.run([sys.executable, "-m", "su2mvop", "weight", "--ell", "x"], capture_output=True, text=True)
    assert bad.returncode == 2
