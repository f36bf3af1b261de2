"""Command-line entry point: ``wreathdet {det,count,table,classify,verify,mp}``.

Exit codes: 0 success, 1 mismatch between two derivations, 2 usage or parse
error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Sequence

from . import classify, counting, published, verify
from .partitions import is_prime
from .textforms import ParseError, parse_composition_text, parse_multipartition_text
from .wreath import check_multipartition, det_irrep, dim_wreath

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
DEFAULT_CAP = 10**7


class CapExceeded(Exception):
    pass


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None
    r: int | None
    p: int | None
    out: str | None
    fmt: str
    workers: int
    cap: int
    check: bool
    strict_paper: bool


def _guard(estimate: int, cap: int) -> None:
    if estimate > cap:
        raise CapExceeded(f"estimated {estimate} multipartitions to enumerate exceeds the cap of {cap} (raise --cap)")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# -- commands -------------------------------------------------------------------

def cmd_det(args, cfg: RunConfig) -> int:
    lam = check_multipartition(parse_multipartition_text(args.multipartition))
    if cfg.r is not None and cfg.r != len(lam):
        raise UsageError(f"--r {cfg.r} but the multipartition has {len(lam)} components")
    det = det_irrep(lam)
    info = {"label": det.label, "x": det.zeta_exp, "y": det.sign_exp, "dim": dim_wreath(lam)}
    if cfg.fmt == "json":
        _emit(_json_text(info), cfg.out)
    else:
        _emit(f"{det.label}\nx={det.zeta_exp}\ny={det.sign_exp}\ndim={info['dim']}\n", cfg.out)
    return EXIT_OK


def cmd_count(args, cfg: RunConfig) -> int:
    n = _need(cfg.n, "--n")
    r = _need(cfg.r, "--r")
    if args.composition:
        a = parse_composition_text(args.composition)
        if len(a) != r or sum(a) != n:
            raise UsageError(f"composition {a} is not a length-{r} composition of {n}")
        a = tuple(sorted(a, reverse=True))
        _guard(counting.ordering_count(a) * _product_of_partition_counts(a), cfg.cap)
        return _count_composition(a, r, cfg)
    _guard(3 * counting.count_multipartitions(n, r), cfg.cap)
    formula = counting.count_odd_wreath(n, r)
    brute = counting.count_odd_wreath_brute(n, r)
    try:
        table = counting.n_table_aggregate(n, r, workers=cfg.workers, cross_check=True)
    except counting.FormulaMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    info = {
        "n": n,
        "r": r,
        "multipartitions": counting.count_multipartitions(n, r),
        "odd_degree_formula": formula,
        "odd_degree_enumerated": brute,
        "A(n)": counting.count_odd_sym(n),
        "B(n)": counting.count_chiral_sym(n),
        "table": dict(zip(counting.column_names(r), table.values)),
    }
    status = EXIT_OK if formula == brute else EXIT_MISMATCH
    if cfg.fmt == "json":
        _emit(_json_text(info), cfg.out)
    else:
        lines = "".join(f"{k}: {v}\n" for k, v in info.items() if k != "table")
        _emit(lines + _csv_text([counting.NTable.csv_header(r), table.csv_row()]), cfg.out)
    return status


def _product_of_partition_counts(a) -> int:
    out = 1
    for x in a:
        out *= counting.partition_count(x)
    return out


def _count_composition(a, r: int, cfg: RunConfig) -> int:
    split = counting.chirality_split(a)
    brute = counting.chirality_split_brute(a)
    try:
        table = counting.n_table_for_composition(a, r, check=True)
        status = EXIT_OK if (split.A0, split.A1) == (brute.A0, brute.A1) else EXIT_MISMATCH
    except counting.FormulaMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        table = counting.n_table_for_composition(a, r, check=False)
        status = EXIT_MISMATCH
    if cfg.fmt == "json":
        info = {
            "composition": list(a),
            "A0": brute.A0,
            "A1": brute.A1,
            "A1_formula": split.A1,
            "orderings": counting.ordering_count(a),
            "formulas_checked": table.formulas,
            "table": dict(zip(counting.column_names(r), table.values)),
        }
        _emit(_json_text(info), cfg.out)
    else:
        _emit(_csv_text([counting.NTable.csv_header(r), table.csv_row()]), cfg.out)
    return status


def _plot_rows(tables: list[counting.NTable], r: int) -> list[list[str]]:
    rows = [["n"] + [f"log2_{c}" for c in counting.column_names(r)]]
    for t in tables:
        rows.append([str(t.n)] + [f"{math.log2(v):.6f}" if v else "" for v in t.values])
    return rows


def cmd_table(args, cfg: RunConfig) -> int:
    n_max = _need(cfg.n, "--n")
    r = _need(cfg.r, "--r")
    if not is_prime(r):
        raise UsageError(f"--r must be prime, got {r}")
    if n_max < 1:
        raise UsageError("--n must be at least 1")
    per_pass = sum(counting.count_multipartitions(n, r) for n in range(1, n_max + 1))
    _guard(per_pass * (2 if cfg.check else 1), cfg.cap)
    status = EXIT_OK
    tables = []
    for n in range(1, n_max + 1):
        try:
            tables.append(counting.n_table_aggregate(n, r, workers=cfg.workers, cross_check=cfg.check))
        except counting.FormulaMismatch as exc:
            print(f"mismatch: {exc}", file=sys.stderr)
            tables.append(counting.n_table_aggregate(n, r, workers=cfg.workers, cross_check=False))
            status = EXIT_MISMATCH
    if cfg.check and r in published.PUBLISHED_R:
        for t in tables:
            for m in published.compare_with_published(t):
                tag = "documented erratum" if m.documented else "UNDOCUMENTED"
                print(
                    f"published r={m.r} n={m.n} {m.column}: published {m.published}, computed {m.computed} ({tag})",
                    file=sys.stderr,
                )
                if cfg.strict_paper or not m.documented:
                    status = EXIT_MISMATCH
    if cfg.fmt == "json":
        body = [dict(zip(counting.NTable.csv_header(r), t.csv_row())) for t in tables]
        _emit(_json_text(body), cfg.out)
    else:
        _emit(_csv_text([counting.NTable.csv_header(r)] + [t.csv_row() for t in tables]), cfg.out)
    if args.plot_out:
        _emit(_csv_text(_plot_rows(tables, r)), args.plot_out)
    return status


def cmd_classify(args, cfg: RunConfig) -> int:
    a = parse_composition_text(args.composition)
    r = cfg.r if cfg.r is not None else len(a)
    if len(a) != r:
        raise UsageError(f"--r {r} but the composition has {len(a)} entries")
    a = tuple(sorted(a, reverse=True))
    verdict = classify.table1_classify(a, r)
    info = verdict.to_dict()
    status = EXIT_OK
    if cfg.check:
        _guard(counting.ordering_count(a) * _product_of_partition_counts(a), cfg.cap)
        real = classify.realized_values(a)
        info["realized"] = [f"{'-' if y else ''}{'1' if x == 0 else f'zeta^{x}'}" for x, y in sorted(real)]
        if any(not verdict.possible.contains(k) for k in real):
            status = EXIT_MISMATCH
        violated = sorted(
            row for row in verdict.table_rows if any(not classify.ROW_CLAIMS[row].contains(k) for k in real)
        )
        info["rows_contradicted_by_enumeration"] = violated
        if violated and cfg.strict_paper:
            status = EXIT_MISMATCH
    if cfg.fmt == "json":
        _emit(_json_text(info), cfg.out)
    else:
        lines = [f"{k}: {v}" for k, v in info.items()]
        _emit("\n".join(lines) + "\n", cfg.out)
    return status


def cmd_verify(args, cfg: RunConfig) -> int:
    rs = tuple(int(x) for x in args.r_list.split(",")) if args.r_list else (2, 3, 5)
    n_max = cfg.n if cfg.n is not None else 8
    vcfg = verify.VerifyConfig(
        r_values=rs,
        n_max=n_max,
        samples=args.samples,
        strict_paper=cfg.strict_paper,
        inject_fault=args.inject_fault,
        workers=cfg.workers,
    )
    if args.inject_fault is not None and args.inject_fault not in verify.CHECKS:
        raise UsageError(f"unknown check {args.inject_fault!r}; known: {', '.join(verify.CHECKS)}")
    _guard(verify.estimated_enumeration(vcfg), cfg.cap)
    report = verify.run_checks(vcfg)
    if cfg.fmt == "json":
        _emit(_json_text(report.to_dict()), cfg.out)
    else:
        rows = [["check", "inputs", "formula_value", "oracle_value", "status"]]
        for c in report.results:
            if c.status != "pass":
                rows.append([c.name, json.dumps(c.inputs), json.dumps(c.formula_value), json.dumps(c.oracle_value), c.status])
        for name, counts in report.summary().items():
            rows.append([name, "*", "", "", " ".join(f"{k}={v}" for k, v in counts.items()) or "not_applicable"])
        _emit(_csv_text(rows), cfg.out)
    for c in report.failures:
        print(f"FAILED {c.name} {json.dumps(c.inputs)}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_mp(args, cfg: RunConfig) -> int:
    n = _need(cfg.n, "--n")
    r = _need(cfg.r, "--r")
    p = _need(cfg.p, "--p")
    if not is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")
    _guard(counting.count_multipartitions(n, r), cfg.cap)
    formula = counting.mp_wreath_formula(n, r, p)
    brute = counting.mp_wreath_brute(n, r, p)
    if cfg.fmt == "json":
        _emit(_json_text({"n": n, "r": r, "p": p, "formula": formula, "enumerated": brute}), cfg.out)
    else:
        _emit(f"{formula}, {brute}\n", cfg.out)
    if formula != brute:
        print("mismatch between generating function and enumeration", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, r_list: bool = False) -> None:
    p.add_argument("--n", type=int)
    if r_list:
        p.add_argument("--r", dest="r_list", help="comma-separated r values (default 2,3,5)")
    else:
        p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=counting.default_workers())
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--check", action="store_true")
    p.add_argument("--strict-paper", action="store_true", help="treat documented errata in published data as failures")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreathdet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="determinant character of one irreducible")
    p.add_argument("multipartition", help="e.g. '2,1;;1'")
    _common(p)

    p = sub.add_parser("count", help="degree and determinant counts for P(n, r)")
    p.add_argument("--composition", help="restrict to the orderings of one composition, e.g. '2,1,0'")
    _common(p)

    p = sub.add_parser("table", help="determinant table for n = 1..N as CSV")
    p.add_argument("--plot-out", help="also write log2 plot data to this path")
    _common(p)

    p = sub.add_parser("classify", help="classify a composition")
    p.add_argument("composition", help="e.g. '3,3,0'")
    _common(p)

    p = sub.add_parser("verify", help="run every formula-versus-enumeration check")
    p.add_argument("--inject-fault", metavar="CHECK", help="perturb the first value of CHECK (test hook)")
    p.add_argument("--samples", type=int, default=2000)
    _common(p, r_list=True)

    p = sub.add_parser("mp", help="irreducibles of degree prime to p, two ways")
    _common(p)
    return parser


COMMANDS = {
    "det": cmd_det,
    "count": cmd_count,
    "table": cmd_table,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "mp": cmd_mp,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        r=getattr(args, "r", None),
        p=args.p,
        out=args.out,
        fmt=args.format,
        workers=max(1, args.workers),
        cap=args.cap,
        check=args.check,
        strict_paper=args.strict_paper,
    )
    for name in ("n", "r", "p"):
        value = getattr(cfg, name)
        if value is not None and value < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, cfg)
    except ParseError as exc:
        print(exc.describe(), file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
