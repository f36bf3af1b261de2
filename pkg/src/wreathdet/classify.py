"""Composition-level determinant classification.

Two sufficient conditions are proven: a residue-class test forcing x = 0 (odd
prime r) and four binary-digit conditions forcing y = 0. The eight rows of the
special-composition table are also evaluated as printed. A row's printed
claim is "backed" only when it follows from the proven conditions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .counting import distinct_orderings
from .partitions import binary_profile, is_prime
from .wreath import Composition, det_key, e_multinomials, multipartitions_on

ALL_X = "all"


def _odd_prime(r: int) -> bool:
    return r > 2 and is_prime(r)


def residue_class_test(a: Sequence[int], r: int) -> bool:
    """True iff every multinomial(n-1; ..., a_k - 1, ...) has the same residue mod r."""
    if not _odd_prime(r):
        raise ValueError(f"r={r} is not an odd prime")
    if len(a) != r:
        raise ValueError(f"composition {tuple(a)} does not have {r} entries")
    return len({m % r for m in e_multinomials(tuple(a))}) == 1


def y_parity_conditions(a: Sequence[int]) -> frozenset[int]:
    """Which of the four parity conditions (numbered 1-4) hold for ``a``.

    1. two entries share a binary digit above their lowest set bit
    2. three entries are 2 mod 4
    3. three entries are 3, 2 and 1 mod 4
    4. at least four entries are odd
    """
    held = set()
    high = [p.bits - {p.ord2} for p in map(binary_profile, a) if p.ord2 is not None]
    if any(high[i] & high[j] for i in range(len(high)) for j in range(i + 1, len(high))):
        held.add(1)
    mods = [x % 4 for x in a]
    if mods.count(2) >= 3:
        held.add(2)
    if 3 in mods and 2 in mods and 1 in mods:
        held.add(3)
    if sum(1 for x in a if x % 2) >= 4:
        held.add(4)
    return frozenset(held)


@dataclass(frozen=True)
class ValueSet:
    """Possible determinants as a product of an x-set and a y-set.

    ``x`` is either the tuple (0,) or ALL_X; ``y`` is (0,) or (0, 1).
    """

    x: tuple[int, ...] | str
    y: tuple[int, ...]

    def contains(self, key: tuple[int, int]) -> bool:
        return (self.x == ALL_X or key[0] in self.x) and key[1] in self.y

    def issubset(self, other: "ValueSet") -> bool:
        x_ok = other.x == ALL_X or (self.x != ALL_X and set(self.x) <= set(other.x))
        return x_ok and set(self.y) <= set(other.y)

    def describe(self) -> list[str]:
        signs = {0: "", 1: "-"}
        if self.x == ALL_X:
            return [f"{signs[y]}zeta^s" for y in self.y]
        return [f"{signs[y]}1" for y in self.y]


UNRESTRICTED = ValueSet(ALL_X, (0, 1))
ROW_CLAIMS = {
    1: ValueSet((0,), (0,)),
    2: ValueSet((0,), (0, 1)),
    3: ValueSet((0,), (0, 1)),
    **{k: ValueSet(ALL_X, (0,)) for k in range(4, 9)},
}


def _row_predicates(a: Composition, r: int) -> tuple[set[int], list[str]]:
    rows: set[int] = set()
    notes: list[str] = []
    if _odd_prime(r):
        if all(x == a[0] for x in a) and a[0] >= 2:
            rows.add(1)
        if len({x % r for x in a}) == 1:
            rows.add(2)
        for i, ai in enumerate(a):
            if ai % r:
                continue
            others = {x % r for k, x in enumerate(a) if k != i}
            if len(others) != 1:
                continue
            s = others.pop()
            ceil_half = (r + 1) // 2
            if s > ceil_half:
                rows.add(3)
            elif s > r // 2:
                notes.append(
                    f"row 3 boundary: residue {s} exceeds floor(r/2) but not ceil(r/2); "
                    "the ceil threshold is applied"
                )
    if any(a[i] == a[j] > 2 for i in range(len(a)) for j in range(i + 1, len(a))):
        rows.add(4)
    if sum(1 for x in a if x % 2) >= 4:
        rows.add(5)
    mods = [x % 4 for x in a]
    if mods.count(2) >= 3:
        rows.add(6)
    if mods.count(3) >= 2:
        rows.add(7)
    if 3 in mods and 2 in mods and 1 in mods:
        rows.add(8)
    # row 3 notes are only informative when the row itself is not matched
    if 3 in rows:
        notes = [n for n in notes if not n.startswith("row 3 boundary")]
    return rows, notes


@dataclass
class ClassificationVerdict:
    a: Composition
    r: int
    residue_class_holds: bool | None  # None when r is not an odd prime
    parity_conditions: frozenset[int]
    table_rows: frozenset[int]
    possible: ValueSet
    backed_rows: frozenset[int]
    unbacked_rows: frozenset[int]
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "composition": list(self.a),
            "r": self.r,
            "n": sum(self.a),
            "residue_class_holds": self.residue_class_holds,
            "parity_conditions": sorted(self.parity_conditions),
            "table_rows": sorted(self.table_rows),
            "backed_rows": sorted(self.backed_rows),
            "unbacked_rows": sorted(self.unbacked_rows),
            "possible_values": self.possible.describe(),
            "notes": list(self.notes),
        }


def table1_classify(a: Sequence[int], r: int) -> ClassificationVerdict:
    """Classify a weakly decreasing composition of length r.

    ``possible`` comes only from the proven conditions. Every matched table
    row is listed, and rows whose printed value set is narrower than
    ``possible`` are reported as unbacked.
    """
    a = tuple(a)
    if len(a) != r:
        raise ValueError(f"composition {a} does not have {r} entries")
    if any(x < 0 for x in a):
        raise ValueError("composition entries must be nonnegative")
    if any(a[i] < a[i + 1] for i in range(r - 1)):
        raise ValueError(f"composition {a} is not weakly decreasing")
    rc = residue_class_test(a, r) if _odd_prime(r) else None
    conds = y_parity_conditions(a)
    possible = ValueSet((0,) if rc else ALL_X, (0,) if conds else (0, 1))
    rows, notes = _row_predicates(a, r)
    backed = frozenset(k for k in rows if possible.issubset(ROW_CLAIMS[k]))
    unbacked = frozenset(rows) - backed
    for k in sorted(unbacked):
        notes.append(
            f"row {k} claims {ROW_CLAIMS[k].describe()} but the proven conditions only give "
            f"{possible.describe()}"
        )
    return ClassificationVerdict(a, r, rc, conds, frozenset(rows), possible, backed, unbacked, notes)


def realized_values(a: Sequence[int]) -> set[tuple[int, int]]:
    """Every (x, y) attained over all orderings of ``a``."""
    out = set()
    for b in distinct_orderings(a):
        for lam in multipartitions_on(b):
            out.add(det_key(lam))
    return out
