"""Seeded random multipartitions and permutations for property checks."""
from __future__ import annotations

import random
from typing import Sequence

from .partitions import enumerate_partitions
from .wreath import Composition, Multipartition


def random_composition(rng: random.Random, n: int, r: int) -> Composition:
    """Uniform over length-r compositions of n (stars and bars)."""
    bars = sorted(rng.sample(range(n + r - 1), r - 1))
    edges = [-1] + bars + [n + r - 1]
    return tuple(edges[i + 1] - edges[i] - 1 for i in range(r))


def random_multipartition(rng: random.Random, n: int, r: int) -> Multipartition:
    a = random_composition(rng, n, r)
    return tuple(rng.choice(enumerate_partitions(x)) for x in a)


def random_permutation(rng: random.Random, r: int) -> tuple[int, ...]:
    perm = list(range(r))
    rng.shuffle(perm)
    return tuple(perm)


def adjacent_word(perm: Sequence[int]) -> list[int]:
    """Reduced word for ``perm`` as 0-based positions j of successive swaps (j, j+1).

    Applying the swaps in order to a multipartition reproduces
    ``apply_permutation(lam, perm)``.
    """
    labels = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(labels) - 1):
            if labels[j] > labels[j + 1]:
                labels[j], labels[j + 1] = labels[j + 1], labels[j]
                word.append(j)
                changed = True
    return word
