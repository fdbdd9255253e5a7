"""Determinant formula sweep over l = 0, 1/2, ..., lmax, with timings, written as CSV.

    python3 scripts/det_sweep.py --lmax 6 --out det.csv

The default bound matches the acceptance suite (l <= 3).  Larger bounds work
up to 16 but the runtime grows steeply with l.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from su2mvop.scalars import half, rat_str
from su2mvop.weight import det_conjecture_check


@dataclass
class DetSweepConfig:
    lmax: Fraction = Fraction(3)
    out: str | None = None


def sweep(cfg: DetSweepConfig):
    rows = []
    for k in range(half(cfg.lmax).twice + 1):
        l = half(Fraction(k, 2))
        start = time.perf_counter()
        rep = det_conjecture_check(l, bound=cfg.lmax)
        rows.append({"l": str(l), "holds": rep.holds, "degree": rep.lhs.degree if rep.lhs else -1,
                     "leading_coefficient": rat_str(rep.leading_coefficient),
                     "signed_form_ok": not rep.notes, "seconds": f"{time.perf_counter() - start:.3f}"})
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lmax", type=Fraction, default=DetSweepConfig.lmax)
    ap.add_argument("--out")
    ns = ap.parse_args(argv)
    cfg = DetSweepConfig(lmax=ns.lmax, out=ns.out)
    if cfg.lmax > 16:
        ap.error("--lmax is capped at 16")
    rows = sweep(cfg)
    fh = open(cfg.out, "w", newline="", encoding="utf-8") if cfg.out else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if cfg.out:
            fh.close()
    return 0 if all(r["holds"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
