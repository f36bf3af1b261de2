"""Bundled copies of the published reference tables and the errata list.

The tables are stored exactly as published, misprints included. ``errata.csv``
lists every cell known to disagree with enumeration.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

from .counting import NTable, column_names

PUBLISHED_R = (2, 3, 5, 7)


@dataclass(frozen=True)
class Erratum:
    r: int
    n: int
    column: str
    published: int
    computed: int


@dataclass(frozen=True)
class CellMismatch:
    r: int
    n: int
    column: str
    published: int
    computed: int
    documented: bool


def _read(name: str) -> list[dict[str, str]]:
    text = resources.files("wreathdet.data").joinpath(name).read_text()
    return list(csv.DictReader(text.splitlines()))


def published_table(r: int) -> dict[int, dict[str, int]]:
    """n -> {column name -> published value}."""
    if r not in PUBLISHED_R:
        raise ValueError(f"no published table for r={r}")
    out = {}
    for row in _read(f"published_r{r}.csv"):
        n = int(row.pop("n"))
        out[n] = {k: int(v) for k, v in row.items()}
    return out


def errata() -> list[Erratum]:
    return [
        Erratum(int(row["r"]), int(row["n"]), row["column"], int(row["published"]), int(row["computed"]))
        for row in _read("errata.csv")
    ]


def compare_with_published(table: NTable) -> list[CellMismatch]:
    """Cells of an aggregate table that differ from the published row."""
    pub = published_table(table.r).get(table.n)
    if pub is None:
        return []
    known = {(e.r, e.n, e.column): e for e in errata()}
    out = []
    for name, value in zip(column_names(table.r), table.values):
        if pub[name] != value:
            e = known.get((table.r, table.n, name))
            documented = e is not None and e.published == pub[name] and e.computed == value
            out.append(CellMismatch(table.r, table.n, name, pub[name], value, documented))
    return out
