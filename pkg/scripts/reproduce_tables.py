"""Regenerate the determinant tables for r in {2, 3, 5, 7} and compare them
with the bundled published copies.

    python3 scripts/reproduce_tables.py --out-dir results/tables
"""
from __future__ import annotations

import argparse
import csv
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

from wreathdet.counting import NTable, column_names, default_workers, n_table_aggregate
from wreathdet.published import compare_with_published


@dataclass(frozen=True)
class TableRun:
    out_dir: Path = Path("results/tables")
    n_max: dict[int, int] = field(default_factory=lambda: {2: 10, 3: 10, 5: 10, 7: 10})
    workers: int = default_workers()


def write_csv(path: Path, rows) -> None:
    with path.open("w", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerows(rows)


def run(cfg: TableRun) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    report = [["r", "n", "column", "published", "computed", "documented"]]
    undocumented = 0
    for r, n_max in cfg.n_max.items():
        start = time.perf_counter()
        tables = [n_table_aggregate(n, r, workers=cfg.workers) for n in range(1, n_max + 1)]
        write_csv(cfg.out_dir / f"table_r{r}.csv", [NTable.csv_header(r)] + [t.csv_row() for t in tables])
        plot = [["n"] + [f"log2_{c}" for c in column_names(r)]]
        plot += [[t.n] + [f"{math.log2(v):.6f}" if v else "" for v in t.values] for t in tables]
        write_csv(cfg.out_dir / f"plot_r{r}.csv", plot)
        for t in tables:
            for m in compare_with_published(t):
                report.append([m.r, m.n, m.column, m.published, m.computed, m.documented])
                undocumented += not m.documented
        print(f"r={r}: n=1..{n_max} in {time.perf_counter() - start:.1f}s")
    write_csv(cfg.out_dir / "published_comparison.csv", report)
    print(f"{len(report) - 1} cells differ from the published tables, {undocumented} undocumented")
    return 1 if undocumented else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", type=Path, default=TableRun.out_dir)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--workers", type=int, default=default_workers())
    args = parser.parse_args()
    cfg = TableRun(args.out_dir, {r: args.n_max for r in (2, 3, 5, 7)}, args.workers)
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
