"""Counting irreducibles of S_n and G(n, r) by degree and by determinant.

Brute-force enumeration is the ground truth everywhere in this module; the
closed formulas are evaluated next to it and compared.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Sequence

from .partitions import (
    binary_profile,
    chirality,
    dim_sym,
    enumerate_partitions,
    is_prime,
    multinomial_exact,
    partition_count,
)
from .wreath import (
    Composition,
    det_key,
    dim_wreath,
    e_multinomials,
    enumerate_multipartitions,
    multipartitions_on,
    orbit_count,
    tau_multinomials,
)


class FormulaMismatch(AssertionError):
    """A closed formula disagreed with enumeration."""


# -- symmetric group ---------------------------------------------------------

def count_odd_sym(n: int) -> int:
    """A(n): product of the powers of 2 in the binary expansion of n (A(0) = 1)."""
    out = 1
    for k in binary_profile(n).bits:
        out *= 1 << k
    return out


def count_odd_sym_brute(n: int) -> int:
    return sum(1 for lam in enumerate_partitions(n) if dim_sym(lam) % 2)


def count_chiral_sym(n: int) -> int:
    """B(n): partitions of n with odd chirality, by enumeration (0 for n < 2)."""
    return sum(1 for lam in enumerate_partitions(n) if chirality(lam) % 2)


def chirality_split_classes(n: int) -> tuple[int, int, int]:
    """Sizes of {f odd, g odd}, {f odd, g even}, {f even, g odd} among partitions of n.

    Raises FormulaMismatch unless they equal A/2, A/2 and B - A/2.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    c = Counter((dim_sym(lam) % 2, chirality(lam) % 2) for lam in enumerate_partitions(n))
    got = (c[(1, 1)], c[(1, 0)], c[(0, 1)])
    half = count_odd_sym(n) // 2
    want = (half, half, count_chiral_sym(n) - half)
    if got != want:
        raise FormulaMismatch(f"n={n}: enumeration {got}, formula {want}")
    return got


def mp_sym(n: int, p: int) -> int:
    """Irreducibles of S_n whose degree is prime to p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return sum(1 for lam in enumerate_partitions(n) if dim_sym(lam) % p)


# -- truncated power series --------------------------------------------------

def partition_series(degree: int) -> list[int]:
    """Coefficients of the partition generating function up to x^degree."""
    return [partition_count(k) for k in range(degree + 1)]


def series_mul(a: Sequence[int], b: Sequence[int], degree: int) -> list[int]:
    out = [0] * (degree + 1)
    for i, ai in enumerate(a[: degree + 1]):
        if ai:
            for j, bj in enumerate(b[: degree + 1 - i]):
                out[i + j] += ai * bj
    return out


def series_pow(a: Sequence[int], e: int, degree: int) -> list[int]:
    result = [1] + [0] * degree
    base = list(a[: degree + 1]) + [0] * max(0, degree + 1 - len(a))
    while e:
        if e & 1:
            result = series_mul(result, base, degree)
        e >>= 1
        if e:
            base = series_mul(base, base, degree)
    return result


def count_multipartitions(n: int, r: int) -> int:
    """|P(n, r)| = [x^n] P(x)^r."""
    return series_pow(partition_series(n), r, n)[n]


# -- G(n, r) degree counts ---------------------------------------------------

def count_odd_wreath(n: int, r: int) -> int:
    """r^|bin(n)| * A(n)."""
    return r ** len(binary_profile(n).bits) * count_odd_sym(n)


def count_odd_wreath_brute(n: int, r: int) -> int:
    return sum(1 for lam in enumerate_multipartitions(n, r) if dim_wreath(lam) % 2)


def base_digits(n: int, p: int) -> list[int]:
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def mp_wreath_formula(n: int, r: int, p: int) -> int:
    """Product over base-p digits d_k of n of [x^d_k] P(x)^(r p^k)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pseries = partition_series(n)
    out = 1
    for k, d in enumerate(base_digits(n, p)):
        if d:
            out *= series_pow(pseries, r * p**k, d)[d]
    return out


def mp_wreath_brute(n: int, r: int, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return sum(1 for lam in enumerate_multipartitions(n, r) if dim_wreath(lam) % p)


# -- per-composition parity split ----------------------------------------------

@dataclass(frozen=True)
class ChiralitySplit:
    a: Composition
    A0: int
    A1: int


def _odd_count(m: int) -> int:
    return count_odd_sym(m)


def _chiral_count(m: int) -> int:
    return count_chiral_sym(m) if m >= 2 else 0


def chirality_split(a: Sequence[int]) -> ChiralitySplit:
    """A0/A1 on a fixed composition from the two-case parity formula.

    Case 1 (every tau-multinomial even): A1 is prod A(a_k) when the orbit
    count is odd, else 0. Case 2 (the set I of odd tau-multinomials has m >= 1
    members): A1 = sum_{i in I} B(a_i) prod_{k != i} A(a_k) - (m-1)/2 prod A(a_k).
    """
    a = tuple(a)
    odd = [_odd_count(x) for x in a]
    prod_odd = 1
    for v in odd:
        prod_odd *= v
    odd_positions = [k for k, m in enumerate(tau_multinomials(a)) if m % 2]
    if not odd_positions:
        a1 = prod_odd if orbit_count(a) % 2 else 0
    else:
        m = len(odd_positions)
        head = 0
        for i in odd_positions:
            rest = 1
            for k, v in enumerate(odd):
                if k != i:
                    rest *= v
            head += _chiral_count(a[i]) * rest
        correction, rem = divmod((m - 1) * prod_odd, 2)
        if rem:
            raise FormulaMismatch(f"{a}: (m-1)/2 * prod A(a_k) is not an integer")
        a1 = head - correction
    total = 1
    for x in a:
        total *= partition_count(x)
    return ChiralitySplit(a, total - a1, a1)


def chirality_split_brute(a: Sequence[int]) -> ChiralitySplit:
    a = tuple(a)
    c = Counter(det_key(lam)[1] for lam in multipartitions_on(a))
    return ChiralitySplit(a, c[0], c[1])


# -- orderings of a composition ------------------------------------------------

def distinct_orderings(a: Sequence[int]) -> Iterator[Composition]:
    """Distinct rearrangements of ``a`` in lexicographically decreasing order."""
    cur = sorted(a, reverse=True)
    while True:
        yield tuple(cur)
        # next permutation towards smaller lex order
        i = len(cur) - 2
        while i >= 0 and cur[i] <= cur[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(cur) - 1
        while cur[j] >= cur[i]:
            j -= 1
        cur[i], cur[j] = cur[j], cur[i]
        cur[i + 1:] = reversed(cur[i + 1:])


def repetition_factor(a: Sequence[int]) -> int:
    """Product over distinct values of (multiplicity)!."""
    out = 1
    for c in Counter(a).values():
        out *= factorial(c)
    return out


def ordering_count(a: Sequence[int]) -> int:
    return factorial(len(a)) // repetition_factor(a)


def canonical_compositions(n: int, r: int) -> list[Composition]:
    """Weakly decreasing length-r compositions of n (partitions padded with 0)."""
    return [lam + (0,) * (r - len(lam)) for lam in enumerate_partitions(n) if len(lam) <= r]


def residue_values(a: Sequence[int], r: int) -> tuple[int, ...]:
    return tuple(m % r for m in e_multinomials(tuple(a)))


def single_residue_class(a: Sequence[int], r: int) -> bool:
    return len(set(residue_values(a, r))) == 1


# -- determinant tables ---------------------------------------------------------

def column_keys(r: int) -> list[tuple[int, int]]:
    """(x, y) keys in table column order: 1, zeta^s, -zeta^s, -1."""
    return [(0, 0)] + [(s, 0) for s in range(1, r)] + [(s, 1) for s in range(1, r)] + [(0, 1)]


def column_names(r: int) -> list[str]:
    return (
        ["N_1"]
        + [f"N_zeta_{s}" for s in range(1, r)]
        + [f"N_negzeta_{s}" for s in range(1, r)]
        + ["N_neg1"]
    )


@dataclass
class NTable:
    n: int
    r: int
    scope: Composition | None  # None for the aggregate over P(n, r)
    counts: dict[tuple[int, int], int]
    formulas: list[str] = field(default_factory=list)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)

    @property
    def values(self) -> list[int]:
        return [self[k] for k in column_keys(self.r)]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def scope_label(self) -> str:
        if self.scope is None:
            return "aggregate"
        return ",".join(str(x) for x in self.scope)

    @staticmethod
    def csv_header(r: int) -> list[str]:
        return ["n", "r", "scope"] + column_names(r) + ["total"]

    def csv_row(self) -> list[str]:
        return [str(self.n), str(self.r), self.scope_label] + [str(v) for v in self.values] + [str(self.total)]


def _count_on_orderings(a: Composition) -> Counter:
    c: Counter = Counter()
    for b in distinct_orderings(a):
        for lam in multipartitions_on(b):
            c[det_key(lam)] += 1
    return c


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise FormulaMismatch(what)


def composition_predictions(a: Composition, r: int) -> dict[str, dict]:
    """Closed-formula predictions for the table of a weakly decreasing ``a``.

    Keys name the rule; each value maps a description to the predicted value.
    Rules whose preconditions fail are omitted.
    """
    n = sum(a)
    split = chirality_split(a)
    orderings = ordering_count(a)
    rep = repetition_factor(a)
    out: dict[str, dict] = {
        "orbit_sums": {"sign_even_total": orderings * split.A0, "sign_odd_total": orderings * split.A1},
    }
    if not (r > 2 and is_prime(r)):
        return out
    one_class = single_residue_class(a, r)
    if one_class:
        pred = {(s, y): 0 for s in range(1, r) for y in (0, 1)}
        pred[(0, 0)] = orderings * split.A0
        pred[(0, 1)] = orderings * split.A1
        out["single_class"] = pred
        return out
    if n % r and all(x < r for x in a):
        base = factorial(r - 1)
        q0, r0 = divmod(base * split.A0, rep)
        q1, r1 = divmod(base * split.A1, rep)
        if r0 or r1:
            pred = {"non_integral": (base * split.A0, base * split.A1, rep)}
        else:
            pred = {(s % r, 0): q0 for s in range(1, r + 1)}
            pred.update({(s % r, 1): q1 for s in range(1, r + 1)})
        out["small_n" if n < r else "bounded_parts"] = pred
    coprime = 1
    total = 1
    for x in a:
        coprime *= mp_sym(x, r)
        total *= partition_count(x)
    if n % r:
        out["paired_sums"] = {
            "branch": "r does not divide n",
            "zeta_pair_times_rep": factorial(r - 1) * coprime,
            "trivial_pair_times_rep": factorial(r - 1) * (r * total - (r - 1) * coprime),
            "rep": rep,
        }
    else:
        out["paired_sums"] = {
            "branch": "r divides n",
            "zeta_pair_times_rep": factorial(r - 2) * r * coprime,
            "trivial_pair_times_rep": factorial(r) * (total - coprime),
            "rep": rep,
        }
    return out


def observe(table: NTable, name: str, pred: dict) -> dict:
    """The enumerated counterpart of one prediction, in the same shape."""
    r = table.r
    if name == "orbit_sums":
        return {
            "sign_even_total": sum(table[(s, 0)] for s in range(r)),
            "sign_odd_total": sum(table[(s, 1)] for s in range(r)),
        }
    if name == "paired_sums":
        rep = pred["rep"]
        zeta = sorted({(table[(s, 0)] + table[(s, 1)]) * rep for s in range(1, r)})
        return {
            "branch": pred["branch"],
            "zeta_pair_times_rep": zeta[0] if len(zeta) == 1 else zeta,
            "trivial_pair_times_rep": (table[(0, 0)] + table[(0, 1)]) * rep,
            "rep": rep,
        }
    if "non_integral" in pred:
        return {"non_integral": table.values}
    return {k: table[k] for k in pred}


def compare_predictions(table: NTable, preds: dict[str, dict]) -> dict[str, bool]:
    """Evaluate each prediction against an enumerated composition table."""
    return {name: observe(table, name, pred) == pred for name, pred in preds.items()}


# rules asserted inside n_table_for_composition; the other branch of
# paired_sums is known not to hold and is only reported by the verifier
ASSERTED_RULES = ("orbit_sums", "single_class", "small_n", "bounded_parts")


def n_table_for_composition(a: Sequence[int], r: int, check: bool = True) -> NTable:
    """Determinant counts over all orderings of a weakly decreasing ``a``.

    Enumeration decides the counts. With ``check``, the closed formulas that
    apply are compared and recorded in ``formulas``; a disagreement raises
    FormulaMismatch.
    """
    a = tuple(a)
    if len(a) != r:
        raise ValueError(f"composition {a} does not have {r} entries")
    if any(a[i] < a[i + 1] for i in range(r - 1)) or min(a) < 0:
        raise ValueError(f"composition {a} is not weakly decreasing")
    table = NTable(sum(a), r, a, dict(_count_on_orderings(a)))
    if check:
        preds = composition_predictions(a, r)
        results = compare_predictions(table, preds)
        for name, ok in results.items():
            if name == "paired_sums" and preds[name]["branch"] != "r does not divide n":
                continue
            _check(ok, f"{name} failed for a={a}, r={r}: predicted {preds[name]}, counted {table.values}")
            table.formulas.append(name)
    return table


def _counts_worker(args: tuple[Composition, int]) -> tuple[Composition, dict]:
    a, _ = args
    return a, dict(_count_on_orderings(a))


def default_workers() -> int:
    return os.cpu_count() or 1


# below this many multipartitions a process pool costs more than it saves
PARALLEL_THRESHOLD = 50_000


def n_table_aggregate(n: int, r: int, workers: int = 1, cross_check: bool = True) -> NTable:
    """Determinant counts over P(n, r).

    Sums per-composition counts over the weakly decreasing compositions; with
    ``cross_check`` also enumerates P(n, r) directly and compares.
    """
    reps = canonical_compositions(n, r)
    total: Counter = Counter()
    if workers > 1 and len(reps) > 1 and count_multipartitions(n, r) >= PARALLEL_THRESHOLD:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = dict(pool.map(_counts_worker, [(a, r) for a in reps]))
        for a in reps:
            total.update(results[a])
    else:
        for a in reps:
            total.update(_count_on_orderings(a))
    table = NTable(n, r, None, dict(total))
    if cross_check:
        direct = Counter(det_key(lam) for lam in enumerate_multipartitions(n, r))
        _check(direct == total, f"n={n}, r={r}: composition sum {dict(total)} != direct {dict(direct)}")
        _check(table.total == count_multipartitions(n, r), f"n={n}, r={r}: total {table.total} != |P(n,r)|")
        table.formulas.append("direct_enumeration")
        table.formulas.append("multipartition_count")
    return table


@dataclass
class ClauseResult:
    name: str
    applicable: bool
    passed: bool
    detail: str = ""


def verify_inequalities(n: int, r: int, table: NTable | None = None) -> list[ClauseResult]:
    """Equalities and bounds among the aggregate counts for an odd prime r.

    equal_nontrivial_zeta: N_zeta^s and N_-zeta^s do not depend on 1 <= s < r.
    equal_all_small_n:     for n < r they also equal N_1 and N_-1.
    bounded_by_trivial:    for r not dividing n, N_zeta^s <= N_1 and N_-zeta^s <= N_-1.
    """
    if not (r > 2 and is_prime(r)):
        raise ValueError("r must be an odd prime")
    if table is None:
        table = n_table_aggregate(n, r)
    pos = [table[(s, 0)] for s in range(1, r)]
    neg = [table[(s, 1)] for s in range(1, r)]
    out = [
        ClauseResult(
            "equal_nontrivial_zeta",
            True,
            len(set(pos)) == 1 and len(set(neg)) == 1,
            f"zeta^s: {sorted(set(pos))}, -zeta^s: {sorted(set(neg))}",
        )
    ]
    if n < r:
        ok = set(pos) == {table[(0, 0)]} and set(neg) == {table[(0, 1)]}
        out.append(ClauseResult("equal_all_small_n", True, ok, f"N_1={table[(0, 0)]}, N_-1={table[(0, 1)]}"))
    else:
        out.append(ClauseResult("equal_all_small_n", False, True, "n >= r"))
    if n % r:
        ok = max(pos) <= table[(0, 0)] and max(neg) <= table[(0, 1)]
        out.append(
            ClauseResult(
                "bounded_by_trivial",
                True,
                ok,
                f"{max(pos)} <= {table[(0, 0)]}, {max(neg)} <= {table[(0, 1)]}",
            )
        )
    else:
        out.append(ClauseResult("bounded_by_trivial", False, True, "r divides n"))
    return out
