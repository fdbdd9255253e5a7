"""Command-line front end.

Every subcommand prints (or writes to ``--out``) a JSON document
``{"schema_version": 1, "config": ..., "result": ...}`` with sorted keys, or a
CSV table with a header row.  Exit status: 0 ok, 1 a verification case
failed, 2 usage error, 3 exactness violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, fields
from fractions import Fraction

from .clebsch_gordan import DEFAULT_PRECISION_BITS
from .scalars import HalfInt, QuadRat, half, rat_str
from .verify import jsonable

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXACTNESS = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    ell: HalfInt | None = None
    ells: list | None = None
    degree: int | None = None
    dmax: int = 6
    block: int | None = None
    basis: str = "monomial"
    split: bool = False
    monic: bool = False
    recurrence: int | None = None
    op: str | None = None
    verify: str | None = None
    rodrigues: int | None = None
    norms: int | None = None
    restricted: list | None = None
    suite: list | None = None
    max: int | None = None
    precision_bits: int = DEFAULT_PRECISION_BITS
    jobs: int = 1
    format: str = "json"
    out: str | None = None
    timing: bool = True
    inject_fault: bool = False

    def to_json(self):
        skip = {"out", "jobs", "timing", "inject_fault"}
        d = {f.name: getattr(self, f.name) for f in fields(self) if f.name not in skip}
        return {k: jsonable(v) for k, v in d.items() if v is not None and v is not False}


# ---------------------------------------------------------------------------
# formatting


def parse_ell(s: str) -> HalfInt:
    """'3/2', '1.5' and '1' are accepted; the value must be a nonnegative multiple of 1/2."""
    try:
        v = Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {s!r}")
    if v < 0 or (2 * v).denominator != 1:
        raise argparse.ArgumentTypeError(f"ell must be a nonnegative multiple of 1/2, got {s!r}")
    return half(v)


def _scalar_str(c) -> str:
    if isinstance(c, QuadRat):
        if c.b == 0:
            return rat_str(c.a)
        b = "sqrt2" if c.b == 1 else f"{rat_str(c.b)}*sqrt2"
        return b if c.a == 0 else f"({rat_str(c.a)} + {b})"
    return rat_str(c)


def poly_str(p) -> str:
    """Human-readable polynomial in x, highest power first: '4*x^2 - 1'."""
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        neg = not isinstance(c, QuadRat) and c < 0
        cs = _scalar_str(-c if neg else c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        term = cs if not mono else (mono if cs == "1" else f"{cs}*{mono}")
        if parts:
            parts.append(("- " if neg else "+ ") + term)
        else:
            parts.append(("-" if neg else "") + term)
    return " ".join(parts) if parts else "0"


def matpoly_json(M):
    return {"entries": M.to_json(), "display": [[poly_str(e) for e in row] for row in M.entries],
            "coefficient_matrices": M.coeff_json()}


def dump_json(config: RunConfig, result) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "config": config.to_json(), "result": jsonable(result)}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def _cell(v) -> str:
    j = jsonable(v)
    return j if isinstance(j, str) else json.dumps(j, sort_keys=True)


def _flat(mat):
    return [_cell(v) for row in mat for v in row]


# ---------------------------------------------------------------------------
# commands; each returns (result, csv_table or None, exit status)


def _need(cfg, name):
    if getattr(cfg, name) is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {cfg.command}")
    return getattr(cfg, name)


def cmd_weight(cfg: RunConfig):
    from .weight import block_split, weight_Z

    l = _need(cfg, "ell")
    if cfg.split or cfg.block:
        s = block_split(l)
        blocks = {1: s.W1, 2: s.W2}
        chosen = [cfg.block] if cfg.block else [1, 2]
        result = {"l": l, "form": "(1-x)^a (1+x)^b M(x)", "blocks": {
            f"W{b}": {"a": blocks[b].a, "b": blocks[b].b, **matpoly_json(blocks[b].matrix)} for b in chosen}}
        rows = [(f"W{b}", i, j, k, c) for b in chosen
                for k, mat in enumerate(blocks[b].matrix.coeff_matrices())
                for i, r in enumerate(mat) for j, c in enumerate(r)]
        return result, (("block", "i", "j", "power", "coeff"), rows), EXIT_OK
    Z = weight_Z(l)
    if cfg.basis == "cheb":
        result = {"l": l, "basis": "cheb", "form": "rho * sum_k U_k(x) A_k",
                  "entries": Z.to_json(), "coefficient_matrices": Z.coefficient_matrices()}
        mats = Z.coefficient_matrices()
        index = "U_index"
    else:
        M = Z.to_matpoly()
        result = {"l": l, "basis": "monomial", "form": "rho * Z(x)", **matpoly_json(M)}
        mats = M.coeff_matrices()
        index = "power"
    rows = [(i, j, k, c) for k, mat in enumerate(mats) for i, r in enumerate(mat) for j, c in enumerate(r)]
    return result, (("i", "j", index, "coeff"), rows), EXIT_OK


def cmd_poly(cfg: RunConfig):
    from .core import block_polys, monic_polys, three_term_extract
    from .spherical import full_sf_Q

    l = _need(cfg, "ell")
    if cfg.recurrence is not None:
        n = cfg.recurrence
        if cfg.block:
            fams = block_polys(l, n + 1)
            fam = fams.family1 if cfg.block == 1 else fams.family2
        else:
            fam = monic_polys(l, n + 1)
        table = []
        for d in range(n + 1):
            Bt, Ct = three_term_extract(fam, d)
            table.append({"d": d, "Bt": Bt, "Ct": Ct})
        rows = [[t["d"], *_flat(t["Bt"]), *_flat(t["Ct"])] for t in table]
        k = len(table[0]["Bt"])
        header = ["d"] + [f"Bt_{i}{j}" for i in range(k) for j in range(k)] + [f"Ct_{i}{j}" for i in range(k) for j in range(k)]
        return {"l": l, "block": cfg.block, "recurrence": "x P_d = P_{d+1} + P_d Bt_d + P_{d-1} Ct_d",
                "table": table}, (header, rows), EXIT_OK
    d = _need(cfg, "degree")
    if cfg.block:
        fams = block_polys(l, d)
        P = (fams.family1 if cfg.block == 1 else fams.family2)[d]
        kind = f"monic block {cfg.block}"
    elif cfg.monic:
        P = monic_polys(l, d)[d]
        kind = "monic"
    else:
        P = full_sf_Q(l, d)
        kind = "Q_d = Phi_d Phi_0^{-1}"
    result = {"l": l, "degree": d, "kind": kind, **matpoly_json(P)}
    rows = [(i, j, k, c) for k, mat in enumerate(P.coeff_matrices()) for i, r in enumerate(mat) for j, c in enumerate(r)]
    return result, (("i", "j", "power", "coeff"), rows), EXIT_OK


def cmd_spherical(cfg: RunConfig):
    from .spherical import full_sf, full_sf_Q, restricted_sf

    l = _need(cfg, "ell")
    if cfg.restricted:
        l1, l2 = cfg.restricted
        phi = restricted_sf(l1, l2, l)
        diag = [phi[i][i].to_json() for i in range(len(phi))]
        result = {"l": l, "l1": l1, "l2": l2, "variable": "u = exp(i t / 2)", "diagonal": diag}
        rows = [(i, k, c) for i, e in enumerate(diag) for k, c in e]
        return result, (("i", "u_power", "coeff"), rows), EXIT_OK
    d = _need(cfg, "degree")
    F = full_sf(l, d)
    result = {"l": l, "degree": d, "variable": "u = exp(i t / 2)",
              "Phi": [[e.to_json() for e in row] for row in F], "Q": matpoly_json(full_sf_Q(l, d))}
    rows = [(i, j, k, c) for i, row in enumerate(F) for j, e in enumerate(row) for k, c in e.to_json()]
    return result, (("p_index", "j_index", "u_power", "coeff"), rows), EXIT_OK


def _operator(cfg):
    from .core import monic_polys, weight_for
    from .diffops import eigen_D, eigen_E, example_ops, example_weight, op_D, op_E

    l = _need(cfg, "ell")
    name = _need(cfg, "op")
    if name in ("E", "D"):
        op, table = (op_E(l), eigen_E(l)) if name == "E" else (op_D(l), eigen_D(l))
        return op, table, weight_for(l), lambda n: monic_polys(l, n), [op_E(l), op_D(l)]
    from .core import monic_polys_for

    ops = example_ops(l)
    by = {D.name: (D, t) for D, t in ops}
    w = example_weight(l)
    return by[name][0], by[name][1], w, lambda n: monic_polys_for(w, n), [D for D, _ in ops]


def cmd_diffop(cfg: RunConfig):
    from .diffops import commutes, eigenvalue_check, symmetry_check

    op, table, w, family, peers = _operator(cfg)
    result = {"l": cfg.ell, "op": op.name, "weight": w.name, "operator": op.to_json()}
    status = EXIT_OK
    if cfg.verify == "symmetry":
        r = symmetry_check(op, w)
        result["symmetry"] = {"passed": r.passed, "equations": r.equations, "boundary": r.boundary}
        status = EXIT_OK if r.passed else EXIT_FAIL
    elif cfg.verify == "eigen":
        fam = family(cfg.dmax)
        r = eigenvalue_check(fam, op, table, cfg.dmax)
        result["eigen"] = {"passed": r.passed, "checked": r.checked, "failures": r.failures,
                           "eigenvalues": [table(n) for n in range(cfg.dmax + 1)]}
        status = EXIT_OK if r.passed else EXIT_FAIL
    elif cfg.verify == "commute":
        result["commute"] = {other.name: commutes(op, other) for other in peers if other.name != op.name}
    rows = [(i, r, c, k, v) for i, Fi in enumerate(op.coeffs)
            for k, mat in enumerate(Fi.coeff_matrices()) for r, row in enumerate(mat) for c, v in enumerate(row)]
    return result, (("derivative_order", "i", "j", "power", "coeff"), rows), status


def cmd_examples(cfg: RunConfig):
    from .rodrigues import mirror_check, norms, recurrence_tables, rodrigues_check, rodrigues_family

    l = _need(cfg, "ell")
    if l not in (half(1), half("3/2"), half(2)):
        raise UsageError("examples exist for ell in {1, 3/2, 2}")
    if cfg.rodrigues is not None:
        n = cfg.rodrigues
        r = rodrigues_check(l, n)
        fam = rodrigues_family(l, n)
        result = {"l": l, "nmax": n, "passed": r.passed, "equal_to_monic": r.equal_to_monic,
                  "orthogonal_to_lower": r.orthogonal_to_lower, "jacobi_form_equal": r.jacobi_form_equal,
                  "polynomials": [matpoly_json(P) for P in fam]}
        if l == half("3/2"):
            m = mirror_check(n)
            result["mirror"] = {"signed_monic": m.signed_monic, "signed_orthogonal": m.signed_orthogonal,
                                "unsigned_monic": m.unsigned_monic,
                                "paper_mismatch": not all(m.unsigned_monic)}
        rows = [(k, r.equal_to_monic[k], r.orthogonal_to_lower[k], r.jacobi_form_equal[k]) for k in range(n + 1)]
        return result, (("n", "equal_to_monic", "orthogonal_to_lower", "jacobi_form_equal"), rows), \
            (EXIT_OK if r.passed else EXIT_FAIL)
    if cfg.norms is not None:
        t = norms(l, cfg.norms)
        out = [{"n": r.n, "frame": r.frame, "computed": r.computed, "printed": r.printed,
                "paper_mismatch": not all(all(m) for m in r.matches)} for r in t.rows]
        rows = [(r["n"], r["frame"], i, j, r["computed"][i][j], r["printed"][i][j], not t.rows[k].matches[i][j])
                for k, r in enumerate(out) for i in range(len(r["computed"])) for j in range(len(r["computed"]))]
        return {"l": l, "unit": "pi", "rows": out}, \
            (("n", "frame", "i", "j", "computed", "printed", "paper_mismatch"), rows), EXIT_OK
    n = _need(cfg, "recurrence")
    t = recurrence_tables(l, n)
    out = [{"n": r.n, "name": r.name, "computed": r.computed, "printed": r.printed, "paper_mismatch": not r.matched}
           for r in t.rows]
    rows = [(r.n, r.name, i, j, r.computed[i][j], r.printed[i][j], not r.matches[i][j])
            for r in t.rows for i in range(len(r.computed)) for j in range(len(r.computed))]
    return {"l": l, "residual_zero": t.residual_zero, "rows": out}, \
        (("n", "name", "i", "j", "computed", "printed", "paper_mismatch"), rows), \
        (EXIT_OK if t.residual_zero else EXIT_FAIL)


def cmd_identities(cfg: RunConfig):
    from .hypergeom import sweep_cor_a2, sweep_cor_a3, sweep_prop_a1, sweep_sheppard

    suites = cfg.suite or ["prop-a1", "cor-a2", "cor-a3", "sheppard"]
    fns = {"prop-a1": (sweep_prop_a1, 3), "cor-a2": (sweep_cor_a2, 12), "cor-a3": (sweep_cor_a3, 10),
           "sheppard": (sweep_sheppard, 6)}
    out = []
    for s in suites:
        if s not in fns:
            raise UsageError(f"unknown identity suite {s!r}")
        fn, default = fns[s]
        r = fn(cfg.max if cfg.max is not None else default)
        out.append({"suite": r.suite, "bound": r.bound, "checked": r.checked, "passed": r.passed,
                    "all_pass": r.ok, "counterexamples": r.counterexamples})
    rows = [(r["suite"], r["bound"], r["checked"], r["passed"], r["all_pass"]) for r in out]
    status = EXIT_OK if all(r["all_pass"] for r in out) else EXIT_FAIL
    return {"suites": out}, (("suite", "bound", "checked", "passed", "all_pass"), rows), status


def cmd_verify_all(cfg: RunConfig):
    from .verify import SUITES, Fault, verify_all

    for s in cfg.suite or []:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    fault = Fault() if cfg.inject_fault else None
    rep = verify_all(ells=cfg.ells, jobs=cfg.jobs, fault=fault, suites=cfg.suite,
                     precision_bits=cfg.precision_bits)
    for s in rep.suites:
        counts = ", ".join(f"{s.count(k)} {k}" for k in ("pass", "fail", "paper-mismatch"))
        print(f"[{s.status:>14}] {s.suite}: {counts}", file=sys.stderr)
    if rep.failed_suites:
        print("FAILED suites: " + ", ".join(rep.failed_suites), file=sys.stderr)
    rows = [(s.suite, c.name, c.status, json.dumps(jsonable(c.params), sort_keys=True))
            for s in rep.suites for c in s.cases]
    return rep.to_json(timing=cfg.timing), (("suite", "case", "status", "params"), rows), rep.exit_code


COMMANDS = {
    "weight": cmd_weight, "poly": cmd_poly, "spherical": cmd_spherical, "diffop": cmd_diffop,
    "examples": cmd_examples, "identities": cmd_identities, "verify-all": cmd_verify_all,
}


# ---------------------------------------------------------------------------
# argument parsing


def _ell_list(s: str):
    return [parse_ell(v) for v in s.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--dmax", type=int, default=6)

    p = argparse.ArgumentParser(prog="su2mvop", description="Exact matrix-valued orthogonal polynomials for SU(2).")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weight", parents=[common], help="the weight matrix")
    w.add_argument("--ell", type=parse_ell, required=True)
    w.add_argument("--basis", choices=["cheb", "monomial"], default="monomial")
    w.add_argument("--split", action="store_true", help="the two diagonal blocks")
    w.add_argument("--block", type=int, choices=[1, 2])

    q = sub.add_parser("poly", parents=[common], help="matrix polynomials")
    q.add_argument("--ell", type=parse_ell, required=True)
    q.add_argument("--degree", type=int)
    q.add_argument("--block", type=int, choices=[1, 2])
    g = q.add_mutually_exclusive_group()
    g.add_argument("--monic", action="store_true")
    g.add_argument("--recurrence", type=int, metavar="N", help="recurrence table for d <= N")

    s = sub.add_parser("spherical", parents=[common], help="spherical functions")
    s.add_argument("--ell", type=parse_ell, required=True)
    s.add_argument("--degree", type=int)
    s.add_argument("--restricted", type=parse_ell, nargs=2, metavar=("L1", "L2"))

    d = sub.add_parser("diffop", parents=[common], help="differential operators")
    d.add_argument("--ell", type=parse_ell, required=True)
    d.add_argument("--op", choices=["E", "D", "D1", "D2", "D3"], required=True)
    d.add_argument("--verify", choices=["symmetry", "eigen", "commute"])

    e = sub.add_parser("examples", parents=[common], help="worked examples for ell = 1, 3/2, 2")
    e.add_argument("--ell", type=parse_ell, required=True)
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--rodrigues", type=int, metavar="N")
    g.add_argument("--norms", type=int, metavar="N")
    g.add_argument("--recurrence", type=int, metavar="N")

    i = sub.add_parser("identities", parents=[common], help="hypergeometric identities")
    i.add_argument("--suite", choices=["prop-a1", "cor-a2", "cor-a3", "sheppard"], action="append")
    i.add_argument("--max", type=int)

    v = sub.add_parser("verify-all", parents=[common], help="run every acceptance suite")
    v.add_argument("--ell", type=_ell_list, dest="ells", metavar="L[,L...]", help="restrict to these ell values")
    v.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    v.add_argument("--no-timing", dest="timing", action="store_false", help="omit wall times from the report")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return p


def config_from_args(ns) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for k, v in vars(ns).items():
        if hasattr(cfg, k) and k != "command":
            setattr(cfg, k, v)
    return cfg


def _validate(cfg: RunConfig):
    for name in ("degree", "dmax", "recurrence", "rodrigues", "norms", "max"):
        v = getattr(cfg, name)
        if v is not None and v < 0:
            raise UsageError(f"--{name} must be nonnegative")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if cfg.precision_bits < 64:
        raise UsageError("--precision-bits must be at least 64")


def run(cfg: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        _validate(cfg)
        result, table, status = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"su2mvop: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"su2mvop: exactness violation: {exc}", file=sys.stderr)
        return EXIT_EXACTNESS
    except ValueError as exc:
        print(f"su2mvop: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = dump_json(cfg, result) if cfg.format == "json" else dump_csv(*table)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    return run(config_from_args(ns))


__all__ = ["RunConfig", "parse_ell", "poly_str", "build_parser", "config_from_args", "run", "main",
           "COMMANDS", "SCHEMA_VERSION"] + [f.__name__ for f in COMMANDS.values()]
