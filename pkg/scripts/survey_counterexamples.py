"""Survey where printed statements disagree with enumeration.

Covers the two-branch paired-sum formula for composition tables and the
special-composition table rows, over weakly decreasing compositions of
n <= N for the given odd primes r.

    python3 scripts/survey_counterexamples.py --n-max 8 --r 3,5,7
"""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from wreathdet.classify import ROW_CLAIMS, realized_values, table1_classify
from wreathdet.counting import canonical_compositions, composition_predictions, n_table_for_composition, observe


@dataclass(frozen=True)
class Survey:
    n_max: int = 8
    r_values: tuple[int, ...] = (3, 5)
    show: int = 5


def run(cfg: Survey) -> None:
    paired = Counter()
    paired_examples: dict[str, list] = {}
    rows = Counter()
    row_examples: dict[int, list] = {}
    for r in cfg.r_values:
        for n in range(1, cfg.n_max + 1):
            for a in canonical_compositions(n, r):
                preds = composition_predictions(a, r)
                table = n_table_for_composition(a, r, check=False)
                if "paired_sums" in preds:
                    pred = preds["paired_sums"]
                    ok = observe(table, "paired_sums", pred) == pred
                    paired[(pred["branch"], ok)] += 1
                    if not ok:
                        paired_examples.setdefault(pred["branch"], []).append((r, a))
                verdict = table1_classify(a, r)
                real = realized_values(a)
                for row in verdict.table_rows:
                    held = all(ROW_CLAIMS[row].contains(k) for k in real)
                    rows[(row, held)] += 1
                    if not held:
                        row_examples.setdefault(row, []).append((r, a))
    print("paired-sum formula (branch, holds): count")
    for key, count in sorted(paired.items()):
        print(f"  {key}: {count}")
    for branch, ex in paired_examples.items():
        print(f"  fails ({branch}) e.g. {ex[: cfg.show]}")
    print("table rows (row, holds): count")
    for key, count in sorted(rows.items()):
        print(f"  {key}: {count}")
    for row, ex in sorted(row_examples.items()):
        print(f"  row {row} fails e.g. {ex[: cfg.show]}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--r", default="3,5")
    args = parser.parse_args()
    run(Survey(args.n_max, tuple(int(x) for x in args.r.split(","))))


if __name__ == "__main__":
    main()
