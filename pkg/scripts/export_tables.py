"""Export plot-ready CSV tables for the worked examples into a directory.

    python3 scripts/export_tables.py --out-dir tables --nmax 6

For each l in the config this writes the monic recurrence table of the full
family (poly_l*.csv) and, for l in {1, 3/2, 2}, the block recurrence and norm
tables next to their printed closed forms (recurrence_l*.csv, norms_l*.csv).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from su2mvop.cli import RunConfig, parse_ell, run
from su2mvop.scalars import half

EXAMPLE_ELLS = {half(1), half("3/2"), half(2)}


@dataclass
class ExportConfig:
    out_dir: Path = Path("tables")
    ells: list = field(default_factory=lambda: [half("1/2"), half(1), half("3/2"), half(2)])
    nmax: int = 6
    norms_nmax: int = 4


def _tag(l) -> str:
    return str(l).replace("/", "_")


def export(cfg: ExportConfig) -> list[Path]:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    jobs = []
    for l in cfg.ells:
        jobs.append((f"poly_l{_tag(l)}.csv", RunConfig("poly", ell=l, recurrence=cfg.nmax, format="csv")))
        if l in EXAMPLE_ELLS:
            jobs.append((f"recurrence_l{_tag(l)}.csv", RunConfig("examples", ell=l, recurrence=cfg.nmax, format="csv")))
            jobs.append((f"norms_l{_tag(l)}.csv", RunConfig("examples", ell=l, norms=cfg.norms_nmax, format="csv")))
    written = []
    for name, rc in jobs:
        rc.out = str(cfg.out_dir / name)
        if run(rc) != 0:
            raise SystemExit(f"export of {name} failed")
        written.append(Path(rc.out))
    return written


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path, default=ExportConfig.out_dir)
    ap.add_argument("--ell", type=parse_ell, action="append", dest="ells")
    ap.add_argument("--nmax", type=int, default=ExportConfig.nmax)
    ap.add_argument("--norms-nmax", type=int, default=ExportConfig.norms_nmax)
    ns = ap.parse_args(argv)
    cfg = ExportConfig(out_dir=ns.out_dir, nmax=ns.nmax, norms_nmax=ns.norms_nmax)
    if ns.ells:
        cfg.ells = ns.ells
    for path in export(cfg):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
