"""Command-line frontend: ``biserial-hh <command> --m M --N N ...``."""

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from . import report as R


@dataclass
class RunConfig:
    command: str
    m: int
    N: int
    char: int = 0
    n_max: Optional[int] = None
    fmt: str = "text"
    expected: Optional[str] = None
    table: Optional[int] = None
    formulas: bool = False


class ConfigError(ValueError):
    pass


COMMANDS = ("algebra", "cohomology", "table", "cup", "brackets", "lie", "verify-all")


def build_parser():
    p = argparse.ArgumentParser(prog="biserial-hh",
                                description="Hochschild cohomology of the algebras A(m, N).")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("table", nargs="?", type=int, choices=(1, 2, 3),
                   help="table number for the 'table' command")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--n-max", type=int, default=None, dest="n_max")
    p.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    p.add_argument("--expected", default=None, help="JSON table to diff against")
    p.add_argument("--formulas", action="store_true",
                   help="emit the table from the closed-form formulas instead of computing it")
    return p


def validate(cfg):
    if cfg.m < 3:
        raise ConfigError("m must be at least 3")
    if cfg.N < 1:
        raise ConfigError("N must be at least 1")
    if cfg.n_max is not None and cfg.n_max < 1:
        raise ConfigError("n-max must be at least 1")
    if cfg.command == "table":
        if cfg.table is None:
            raise ConfigError("table needs a number: 1, 2 or 3")
        if cfg.table == 1 and cfg.m % 2:
            raise ConfigError("table 1 is for m even")
        if cfg.table == 2 and cfg.m % 2 == 0:
            raise ConfigError("table 2 is for m odd")
    elif cfg.table is not None:
        raise ConfigError(f"unexpected argument {cfg.table} for {cfg.command}")
    if cfg.expected is not None and cfg.command != "table":
        raise ConfigError("--expected is only supported by the table command")


def _table(E, cfg, n_max):
    make = R.E_table if cfg.table == 3 else R.eigen_table
    out = make(E, n_max, expected=cfg.formulas)
    reference = make(E, n_max, expected=not cfg.formulas)
    mism = R.diff_tables(out, reference)
    out["checks"] = [R._check("matches the closed-form formulas", not mism, mism[:1] or None)]
    if cfg.expected is not None:
        with open(cfg.expected) as fh:
            exp = R.parse(fh.read())
        try:
            m2 = R.diff_tables(out, exp)
        except R.SchemaMismatch as exc:
            raise ConfigError(f"expected table: {exc}") from exc
        out["expected_mismatches"] = m2
        out["checks"].append(R._check(f"matches {cfg.expected}", not m2, m2[:1] or None))
    return out


def run(cfg):
    """Run one command; returns (exit status, report dict or None)."""
    try:
        validate(cfg)
        E = R.Engine(cfg.m, cfg.N, cfg.char)
    except (ConfigError, ValueError) as exc:
        return 2, {"error": str(exc)}
    n_max = cfg.n_max if cfg.n_max is not None else R.default_n_max(cfg.m)
    try:
        if cfg.command == "algebra":
            rep = R.algebra_report(E)
        elif cfg.command == "cohomology":
            rep = R.cohomology_report(E, n_max)
            rep["checks"] = R.resolution_checks(E, n_max) + rep["checks"]
        elif cfg.command == "table":
            rep = _table(E, cfg, n_max)
        elif cfg.command == "cup":
            rep = R.cup_report(E, n_max)
        elif cfg.command == "brackets":
            rep = R.brackets_report(E, n_max)
            rep["checks"] += R.table_checks(E, n_max)[1:]
        elif cfg.command == "lie":
            rep = R.lie_report(E, n_max)
        else:
            rep = R.verify_all(E, n_max)
    except ConfigError as exc:
        return 2, {"error": str(exc)}
    rep["ok"] = R.first_failure(rep) is None
    return (0 if rep["ok"] else 1), rep


def render_text(rep):
    lines = []
    kind = rep.get("kind")
    lines.append(f"A({rep['m']},{rep['N']}) char {rep['char']}: {kind}")
    if kind == "algebra":
        lines.append(f"dimension {rep['dimension']}")
        lines.append("center: " + ", ".join(z["name"] for z in rep["center"]))
    elif kind == "cohomology":
        for d in rep["degrees"]:
            lines.append(f"HH^{d['degree']}: dim {d['dimension']}  " + " ".join(d["basis"]))
    elif kind == "table":
        for row in rep["rows"]:
            if rep["columns"]:
                cells = "  ".join(f"{c}={row['cells'][c]}" for c in rep["columns"])
            else:
                cells = " + ".join(f"{v}*{k}" for k, v in sorted(row["cells"].items())) or "0"
            lines.append(f"{row['row']}: {cells}")
    elif kind == "cup":
        for r in rep["identities"]:
            lines.append(f"{'ok ' if r['ok'] else 'BAD'} {r['identity']}: {r['computed'] or 0}")
    elif kind == "brackets":
        for r in rep["brackets"]:
            lines.append(f"{'ok ' if r['ok'] else 'BAD'} [{r['x']}, {r['y']}] = {r['computed'] or 0}")
    elif kind == "lie":
        lines.append("basis: " + " ".join(rep["basis"]))
        for c in rep["structure_constants"]:
            lines.append(f"[{c['x']}, {c['y']}] = {c['value']}")
        lines.append(f"derived series: {rep['derived_series']}")
        for d in rep["decompositions"]:
            lines.append(f"HH^{d['degree']} = " + " + ".join(s["name"] for s in d["summands"]))
    groups = rep.get("sections") or {"": rep.get("checks", [])}
    for sec, checks in groups.items():
        for c in checks:
            tag = "PASS" if c["ok"] else "FAIL"
            lines.append(f"{tag} {sec + ': ' if sec else ''}{c['name']}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, m=args.m, N=args.N, char=args.char, n_max=args.n_max,
                    fmt=args.fmt, expected=args.expected, table=args.table, formulas=args.formulas)
    status, rep = run(cfg)
    if status == 2:
        print(f"error: {rep['error']}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        sys.stdout.write(R.emit(rep))
    else:
        sys.stdout.write(render_text(rep))
    if status == 1:
        sec, c = R.first_failure(rep)
        print(f"first failure: {sec + ': ' if sec else ''}{c['name']}: {c['detail']}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
