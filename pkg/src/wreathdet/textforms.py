"""Text grammars shared by the CLI and the CSV files.

    partition        3,1,1        (empty string = empty partition)
    composition      2,1,0
    multipartition   2,1;;1       (components separated by ';')
"""
from __future__ import annotations

from typing import Sequence

from .partitions import Partition


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self.describe())

    def describe(self) -> str:
        return (
            f"parse error at position {self.position}: {self.message}\n"
            f"  {self.text}\n"
            f"  {' ' * self.position}^"
        )


def _parse_ints(text: str, offset: int, full: str, allow_zero: bool) -> list[tuple[int, int]]:
    """Comma-separated nonnegative integers; returns (value, position) pairs."""
    if text.strip() == "":
        return []
    out = []
    pos = offset
    for field in text.split(","):
        stripped = field.strip()
        lead = len(field) - len(field.lstrip())
        if not stripped.isdigit():
            raise ParseError(f"expected a nonnegative integer, got {stripped!r}", full, pos + lead)
        value = int(stripped)
        if value == 0 and not allow_zero:
            raise ParseError("partition parts must be positive", full, pos + lead)
        out.append((value, pos + lead))
        pos += len(field) + 1
    return out


def _as_partition(items: list[tuple[int, int]], full: str) -> Partition:
    for (prev, _), (cur, pos) in zip(items, items[1:]):
        if cur > prev:
            raise ParseError("partition parts must be weakly decreasing", full, pos)
    return tuple(v for v, _ in items)


def parse_partition_text(text: str) -> Partition:
    return _as_partition(_parse_ints(text, 0, text, allow_zero=False), text)


def parse_composition_text(text: str) -> tuple[int, ...]:
    items = _parse_ints(text, 0, text, allow_zero=True)
    if not items:
        raise ParseError("empty composition", text, 0)
    return tuple(v for v, _ in items)


def parse_multipartition_text(text: str) -> tuple[Partition, ...]:
    comps = []
    offset = 0
    for chunk in text.split(";"):
        items = _parse_ints(chunk, offset, text, allow_zero=False)
        comps.append(_as_partition(items, text))
        offset += len(chunk) + 1
    return tuple(comps)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def format_composition(a: Sequence[int]) -> str:
    return ",".join(str(x) for x in a)


def format_multipartition(lam: Sequence[Sequence[int]]) -> str:
    return ";".join(format_partition(c) for c in lam)
