"""Single partitions: enumeration, Specht dimensions, transposition characters,
chirality, and prime-residue arithmetic of multinomial coefficients.

Partitions are plain tuples of positive ints in weakly decreasing order; the
empty tuple is the partition of 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    if any(not isinstance(p, int) or p < 1 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts: Iterable[int]) -> Partition:
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam!r}")
    return lam


@lru_cache(maxsize=None)
def _bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for head in range(min(n, largest), 0, -1):
        for tail in _bounded(n - head, head):
            out.append((head,) + tail)
    return tuple(out)


def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically decreasing order.

    >>> enumerate_partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _bounded(n, n)


def partition_count(n: int) -> int:
    return len(enumerate_partitions(n))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def dim_sym(lam: Partition) -> int:
    """Dimension of the Specht module of shape ``lam`` (hook-length formula)."""
    cols = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (cols[j] - i) - 1
    return factorial(sum(lam)) // hooks


def content_sum(lam: Partition) -> int:
    return sum(j - i for i, row in enumerate(lam) for j in range(row))


@lru_cache(maxsize=None)
def transposition_character(lam: Partition) -> int:
    """Character value of the Specht module at a transposition.

    Uses chi(s1) = f * sum(contents) / C(n, 2); the division is exact.
    """
    n = sum(lam)
    if n < 2:
        raise ValueError("a transposition needs at least two letters")
    num = dim_sym(lam) * content_sum(lam) * 2
    q, rem = divmod(num, n * (n - 1))
    assert rem == 0
    return q


@lru_cache(maxsize=None)
def chirality(lam: Partition) -> int:
    """g = (f - chi(s1)) / 2, the multiplicity of -1 as an eigenvalue of a
    transposition. Taken as 0 when |lam| < 2."""
    if sum(lam) < 2:
        return 0
    diff = dim_sym(lam) - transposition_character(lam)
    assert diff % 2 == 0
    return diff // 2


def multinomial_exact(top: int, bottom: Sequence[int]) -> int:
    """top! / prod(b!) ; 0 if any entry is negative or the entries don't sum to top."""
    if any(b < 0 for b in bottom) or sum(bottom) != top:
        return 0
    out = factorial(top)
    for b in bottom:
        out //= factorial(b)
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def binomial_mod_p(m: int, k: int, p: int) -> int:
    """C(m, k) mod p via the base-p digit product."""
    if k < 0 or k > m:
        return 0
    out = 1
    while m or k:
        m, dm = divmod(m, p)
        k, dk = divmod(k, p)
        if dk > dm:
            return 0
        out = out * (factorial(dm) // (factorial(dk) * factorial(dm - dk))) % p
    return out


def multinomial_mod_p_lucas(top: int, bottom: Sequence[int], p: int) -> int:
    """Multinomial coefficient mod a prime ``p``.

    The multinomial is factored into the chain C(a1, a1) C(a1+a2, a2) ... and
    each binomial is reduced digit-wise.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if any(b < 0 for b in bottom) or sum(bottom) != top:
        return 0
    out = 1
    running = 0
    for b in bottom:
        running += b
        out = out * binomial_mod_p(running, b, p) % p
        if out == 0:
            return 0
    return out % p


@dataclass(frozen=True)
class BinaryProfile:
    bits: frozenset[int]
    ord2: int | None  # None for 0

    @property
    def value(self) -> int:
        return sum(1 << k for k in self.bits)


def binary_profile(n: int) -> BinaryProfile:
    if n < 0:
        raise ValueError("n must be nonnegative")
    bits = frozenset(k for k in range(n.bit_length()) if n >> k & 1)
    ord2 = (n & -n).bit_length() - 1 if n else None
    return BinaryProfile(bits, ord2)
