"""Summarise every flagged printed-form discrepancy from a verify-all run.

    python3 scripts/discrepancy_report.py --format markdown
    python3 scripts/discrepancy_report.py --ell 1 --format json --out flags.json

Flags never fail the run; this script lists them grouped by suite with the
exact and printed values side by side.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import defaultdict
from dataclasses import dataclass

from su2mvop.cli import parse_ell
from su2mvop.verify import MISMATCH, jsonable, verify_all


@dataclass
class ReportConfig:
    ells: list | None = None
    jobs: int = 1
    format: str = "markdown"
    out: str | None = None


def collect(cfg: ReportConfig):
    rep = verify_all(ells=cfg.ells, jobs=cfg.jobs)
    groups = defaultdict(list)
    for s in rep.suites:
        for c in s.cases:
            if c.status == MISMATCH:
                groups[s.suite].append({"case": c.name, "params": jsonable(c.params), "detail": jsonable(c.detail)})
    return rep, dict(groups)


def to_markdown(groups) -> str:
    lines = ["# Flagged printed forms", ""]
    for suite, cases in groups.items():
        lines += [f"## {suite} ({len(cases)})", "", "| case | params | detail |", "|---|---|---|"]
        for c in cases:
            params = ", ".join(f"{k}={v}" for k, v in c["params"].items())
            detail = json.dumps(c["detail"], sort_keys=True) if c["detail"] is not None else ""
            lines.append(f"| {c['case']} | {params} | {detail.replace('|', '/')} |")
        lines.append("")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell", type=parse_ell, action="append", dest="ells")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--format", choices=["markdown", "json"], default="markdown")
    ap.add_argument("--out")
    ns = ap.parse_args(argv)
    cfg = ReportConfig(ells=ns.ells, jobs=ns.jobs, format=ns.format, out=ns.out)
    rep, groups = collect(cfg)
    text = to_markdown(groups) if cfg.format == "markdown" else json.dumps(groups, sort_keys=True, indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
