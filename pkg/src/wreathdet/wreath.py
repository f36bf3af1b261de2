"""Irreducibles of G(n, r) = Z_r wr S_n and their determinant characters.

A multipartition is a tuple of ``r`` partitions; ``r`` is always read off its
length and ``n`` off its total size. A primitive r-th root of unity zeta is
never materialised: characters are carried as exponents.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .partitions import (
    Partition,
    chirality,
    conjugate,
    dim_sym,
    enumerate_partitions,
    is_partition,
    multinomial_exact,
    transposition_character,
)

Multipartition = tuple[Partition, ...]
Composition = tuple[int, ...]


@dataclass(frozen=True)
class WreathParams:
    n: int
    r: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.r < 1:
            raise ValueError("r must be at least 1")


@dataclass(frozen=True, order=True)
class DetCharacter:
    """The multiplicative character zeta^zeta_exp * sgn^sign_exp of G(n, r)."""

    zeta_exp: int
    sign_exp: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "zeta_exp", self.zeta_exp % self.r)
        object.__setattr__(self, "sign_exp", self.sign_exp % 2)

    @property
    def key(self) -> tuple[int, int]:
        return (self.zeta_exp, self.sign_exp)

    @property
    def label(self) -> str:
        sign = "-" if self.sign_exp else ""
        if self.zeta_exp == 0:
            return f"{sign}1"
        return f"{sign}zeta^{self.zeta_exp}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class TransferImage:
    """Exponent vectors of the transfer images of a transposition and of a
    generator of one Z_r factor, one entry per block of the Young subgroup."""

    tau_exponents: tuple[int, ...]
    e_exponents: tuple[int, ...]


def composition_of(lam: Multipartition) -> Composition:
    return tuple(sum(c) for c in lam)


def check_multipartition(lam: Sequence[Sequence[int]], params: WreathParams | None = None) -> Multipartition:
    out = tuple(tuple(c) for c in lam)
    if not out:
        raise ValueError("a multipartition needs at least one component")
    for c in out:
        if not is_partition(c):
            raise ValueError(f"component {c!r} is not a partition")
    if params is not None:
        if len(out) != params.r:
            raise ValueError(f"expected {params.r} components, got {len(out)}")
        if sum(composition_of(out)) != params.n:
            raise ValueError(f"multipartition has size {sum(composition_of(out))}, expected {params.n}")
    return out


def _shifted(a: Composition, *drops: tuple[int, int]) -> list[int]:
    b = list(a)
    for k, d in drops:
        b[k] -= d
    return b


def e_multinomials(a: Composition) -> tuple[int, ...]:
    """multinomial(n-1; a_1, ..., a_k - 1, ..., a_r) for each position k."""
    n = sum(a)
    return tuple(multinomial_exact(n - 1, _shifted(a, (k, 1))) for k in range(len(a)))


def tau_multinomials(a: Composition) -> tuple[int, ...]:
    """multinomial(n-2; a_1, ..., a_k - 2, ..., a_r) for each position k."""
    n = sum(a)
    return tuple(multinomial_exact(n - 2, _shifted(a, (k, 2))) for k in range(len(a)))


@lru_cache(maxsize=None)
def orbit_count(a: Composition) -> int:
    """Number of 2-cycles of the transposition (1 2) acting on ordered set
    partitions of {1..n} with block sizes ``a``.

    Equals (n-2)!/prod(a_k!) * sum_{i<j} a_i a_j, computed as a sum of
    integer multinomials so no division is needed.
    """
    n = sum(a)
    r = len(a)
    return sum(
        multinomial_exact(n - 2, _shifted(a, (i, 1), (j, 1)))
        for i in range(r)
        for j in range(i + 1, r)
    )


@lru_cache(maxsize=None)
def _composition_data(a: Composition) -> tuple[int, int, tuple[int, ...], int]:
    e = e_multinomials(a)
    zeta_weight = sum(k * e[k] for k in range(1, len(a)))
    return zeta_weight, orbit_count(a), tau_multinomials(a), multinomial_exact(sum(a), a)


def _component_dims(lam: Multipartition) -> list[int]:
    return [dim_sym(c) for c in lam]


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def dim_wreath(lam: Multipartition) -> int:
    a = composition_of(lam)
    return _prod(_component_dims(lam)) * _composition_data(a)[3]


def x_lambda(lam: Multipartition) -> int:
    """Exponent of zeta in det(rho_lam), reduced mod r."""
    r = len(lam)
    zeta_weight = _composition_data(composition_of(lam))[0]
    return _prod(_component_dims(lam)) * zeta_weight % r


def y_lambda(lam: Multipartition) -> int:
    """Exponent of sgn in det(rho_lam), reduced mod 2.

    Sum of the orbit term (permutation module on cosets, weighted by the
    inducing dimension) and the per-block chirality terms.
    """
    a = composition_of(lam)
    _, orbits, tau, _ = _composition_data(a)
    dims = _component_dims(lam)
    total = _prod(dims)
    t1 = total * orbits
    t2 = 0
    for k, comp in enumerate(lam):
        if tau[k]:
            t2 += chirality(comp) * (total // dims[k]) * tau[k]
    return (t1 + t2) % 2


def det_key(lam: Multipartition) -> tuple[int, int]:
    """(x mod r, y mod 2) without building a DetCharacter; the hot path of
    every enumeration."""
    a = composition_of(lam)
    zeta_weight, orbits, tau, _ = _composition_data(a)
    dims = [dim_sym(c) for c in lam]
    total = _prod(dims)
    y = total * orbits
    for k, comp in enumerate(lam):
        if tau[k]:
            y += chirality(comp) * (total // dims[k]) * tau[k]
    return total * zeta_weight % len(lam), y % 2


def det_irrep(lam: Multipartition) -> DetCharacter:
    x, y = det_key(lam)
    return DetCharacter(x, y, len(lam))


def transfer_image(a: Sequence[int]) -> TransferImage:
    a = tuple(a)
    return TransferImage(tau_multinomials(a), e_multinomials(a))


def char_at_e1(lam: Multipartition) -> tuple[int, ...]:
    """Character value at e_1 = (1, 0, ..., 0; id) as integer coefficients of
    zeta^0, ..., zeta^(r-1)."""
    a = composition_of(lam)
    if sum(a) < 1:
        raise ValueError("e_1 needs n >= 1")
    total = _prod(_component_dims(lam))
    return tuple(total * m for m in e_multinomials(a))


def char_at_s1(lam: Multipartition) -> int:
    """Character value at the transposition s_1 = (0; (1 2))."""
    a = composition_of(lam)
    if sum(a) < 2:
        raise ValueError("s_1 needs n >= 2")
    dims = _component_dims(lam)
    total = _prod(dims)
    out = 0
    for k, (comp, m) in enumerate(zip(lam, tau_multinomials(a))):
        if m:
            out += (total // dims[k]) * transposition_character(comp) * m
    return out


def det_via_eigenvalues(lam: Multipartition) -> DetCharacter:
    """Determinant read off eigenvalue multiplicities of e_1 and s_1.

    e_1 has eigenvalue zeta^k with multiplicity given by the k-th coefficient
    of its character; s_1 is an involution, so -1 occurs (f - chi(s1))/2 times.
    """
    r = len(lam)
    n = sum(composition_of(lam))
    x = 0
    if n >= 1:
        x = sum(k * m for k, m in enumerate(char_at_e1(lam))) % r
    y = 0
    if n >= 2:
        diff = dim_wreath(lam) - char_at_s1(lam)
        assert diff % 2 == 0
        y = diff // 2 % 2
    return DetCharacter(x, y, r)


def apply_permutation(lam: Multipartition, perm: Sequence[int]) -> Multipartition:
    """Move component i to position perm[i] (0-based images).

    With the 1-based cycle (1 2 3) written as perm = (1, 2, 0),
    ((3,), (1,), ()) becomes ((), (3,), (1,)).
    """
    r = len(lam)
    if sorted(perm) != list(range(r)):
        raise ValueError(f"{perm!r} is not a permutation of range({r})")
    out: list[Partition] = [()] * r
    for i, target in enumerate(perm):
        out[target] = lam[i]
    return tuple(out)


def apply_conjugation(lam: Multipartition) -> Multipartition:
    return tuple(conjugate(c) for c in lam)


def enumerate_compositions(n: int, r: int) -> Iterator[Composition]:
    """All length-r compositions of n, lexicographically decreasing."""
    if r == 1:
        yield (n,)
        return
    for head in range(n, -1, -1):
        for tail in enumerate_compositions(n - head, r - 1):
            yield (head,) + tail


def multipartitions_on(a: Sequence[int]) -> Iterator[Multipartition]:
    return product(*(enumerate_partitions(x) for x in a))


def enumerate_multipartitions(n: int, r: int) -> Iterator[Multipartition]:
    """P(n, r): compositions in decreasing lex order, then partitions in
    decreasing lex order component by component."""
    for a in enumerate_compositions(n, r):
        yield from multipartitions_on(a)


def adjacent_swap_x_shift(lam: Multipartition, i: int) -> int:
    """Change in x when components i and i+1 (0-based) are swapped, mod r.

    Equals (prod f) * (n-1)!/(prod a_k!) * (a_i - a_{i+1}), written as a
    difference of two integer multinomials.
    """
    a = composition_of(lam)
    e = e_multinomials(a)
    return _prod(_component_dims(lam)) * (e[i] - e[i + 1]) % len(lam)
