import csv
import importlib.util
import json
import sys
from fractions import Fraction
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(f"scripts_{name}", SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[f"scripts_{name}"] = mod
    spec.loader.exec_module(mod)
    return mod


def test_det_sweep(tmp_path):
    mod = load("det_sweep")
    rows = mod.sweep(mod.DetSweepConfig(lmax=Fraction(2)))
    assert [r["l"] for r in rows] == ["0", "1/2", "1", "3/2", "2"]
    assert all(r["holds"] for r in rows)
    out = tmp_path / "det.csv"
    assert mod.main(["--lmax", "1", "--out", str(out)]) == 0
    assert next(csv.reader(out.open()))[:2] == ["l", "holds"]


def test_export_tables(tmp_path):
    mod = load("export_tables")
    paths = mod.export(mod.ExportConfig(out_dir=tmp_path, ells=[mod.half(1)], nmax=2, norms_nmax=1))
    assert sorted(p.name for p in paths) == ["norms_l1.csv", "poly_l1.csv", "recurrence_l1.csv"]
    rows = list(csv.DictReader((tmp_path / "norms_l1.csv").open()))
    assert any(r["paper_mismatch"] == "true" for r in rows)


def test_discrepancy_report(tmp_path):
    mod = load("discrepancy_report")
    out = tmp_path / "flags.json"
    assert mod.main(["--ell", "1", "--format", "json", "--out", str(out)]) == 0
    groups = json.loads(out.read_text())
    assert "printed-discrepancies" in groups
    assert "# Flagged printed forms" in mod.to_markdown(groups)
