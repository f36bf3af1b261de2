import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import det_by_transfer, orbit_count_brute, transfer_exponents_brute
from wreathdet.partitions import enumerate_partitions
from wreathdet.sampling import adjacent_word, random_multipartition, random_permutation
from wreathdet.wreath import (
    DetCharacter,
    WreathParams,
    adjacent_swap_x_shift,
    apply_conjugation,
    apply_permutation,
    char_at_e1,
    char_at_s1,
    check_multipartition,
    det_irrep,
    det_key,
    det_via_eigenvalues,
    dim_wreath,
    enumerate_compositions,
    enumerate_multipartitions,
    orbit_count,
    transfer_image,
    x_lambda,
    y_lambda,
)


@st.composite
def multipartitions(draw, n_max=8, r_max=5):
    n = draw(st.integers(0, n_max))
    r = draw(st.integers(1, r_max))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_multipartition(random.Random(seed), n, r)


def test_params_validation():
    with pytest.raises(ValueError):
        WreathParams(-1, 2)
    with pytest.raises(ValueError):
        WreathParams(2, 0)
    lam = check_multipartition([[2], [1]], WreathParams(3, 2))
    assert lam == ((2,), (1,))
    with pytest.raises(ValueError):
        check_multipartition([[2], [1]], WreathParams(3, 3))
    with pytest.raises(ValueError):
        check_multipartition([[1, 2]])


def test_det_character_canonical():
    d = DetCharacter(7, 3, 5)
    assert d.key == (2, 1) and d.label == "-zeta^2"
    assert DetCharacter(0, 0, 3).label == "1"
    assert DetCharacter(0, 1, 3).label == "-1"


def test_dimension_examples():
    assert dim_wreath(((1,), (1,))) == 2
    assert dim_wreath(((4,), (), ())) == 1
    assert dim_wreath(((1,), (1,), (1,))) == 6


def test_x_y_examples():
    assert x_lambda(((1,), (1,))) == 1
    assert x_lambda(((2,), ())) == 0
    assert y_lambda(((1, 1), ())) == 1
    assert y_lambda(((1,), (1,))) == 1
    for r in range(1, 6):
        trivial = ((5,),) + ((),) * (r - 1)
        assert x_lambda(trivial) == 0 and y_lambda(trivial) == 0
        assert det_irrep(trivial).key == (0, 0)
    assert det_irrep(((), (2,))).key == (1, 0)


def test_n2_r2_distribution():
    counts = Counter(det_key(lam) for lam in enumerate_multipartitions(2, 2))
    assert counts == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 2}


def test_transfer_image_examples():
    assert transfer_image((2, 2)).tau_exponents == (1, 1)
    assert transfer_image((1, 1)).e_exponents == (1, 1)
    assert transfer_image((1, 0, 0)).tau_exponents == (0, 0, 0)


def test_orbit_count_and_transfer_against_set_partitions():
    for r in range(1, 5):
        for n in range(0, 7):
            for a in enumerate_compositions(n, r):
                assert orbit_count(a) == orbit_count_brute(a)
                img = transfer_image(a)
                tau, e = transfer_exponents_brute(a)
                assert img.tau_exponents == tau and img.e_exponents == e


def test_char_examples():
    assert char_at_e1(((1,), (1,))) == (1, 1)
    assert char_at_e1(((3,), (), ())) == (1, 0, 0)
    assert char_at_e1(((), (2,))) == (0, 1)
    assert char_at_s1(((1, 1), ())) == -1
    assert char_at_s1(((2,), ())) == 1
    assert char_at_s1(((1,), (1,))) == 0
    with pytest.raises(ValueError):
        char_at_s1(((1,), ()))
    with pytest.raises(ValueError):
        char_at_e1(((), ()))


def test_eigenvalue_route_examples():
    assert det_via_eigenvalues(((1,), (1,))).key == (1, 1)
    assert len(list(enumerate_multipartitions(4, 3))) == 51
    for lam in enumerate_multipartitions(4, 3):
        assert det_via_eigenvalues(lam) == det_irrep(lam)


def test_coset_transfer_oracle():
    for r in (1, 2, 3):
        for n in range(0, 6):
            for lam in enumerate_multipartitions(n, r):
                assert det_by_transfer(lam) == det_key(lam), lam
    for lam in enumerate_multipartitions(4, 4):
        assert det_by_transfer(lam) == det_key(lam), lam


@given(multipartitions())
def test_character_identities(lam):
    n = sum(map(sum, lam))
    if n >= 1:
        assert sum(char_at_e1(lam)) == dim_wreath(lam)
    if n >= 2:
        assert (char_at_s1(lam) - dim_wreath(lam)) % 2 == 0


def test_permutation_examples():
    lam = ((3,), (1,), ())
    assert apply_permutation(lam, (0, 1, 2)) == lam
    assert apply_permutation(((2,), (1,)), (1, 0)) == ((1,), (2,))
    assert apply_permutation(lam, (1, 2, 0)) == ((), (3,), (1,))
    with pytest.raises(ValueError):
        apply_permutation(lam, (0, 0, 1))


def test_conjugation_examples():
    assert apply_conjugation(((1, 1), ())) == ((2,), ())
    assert apply_conjugation(((2, 1), (1,))) == ((2, 1), (1,))
    assert apply_conjugation(((3, 1), (2,))) == ((2, 1, 1), (1, 1))


@given(multipartitions(n_max=10, r_max=6))
def test_conjugation_property(lam):
    c = apply_conjugation(lam)
    assert x_lambda(c) == x_lambda(lam)
    if sum(map(sum, lam)) >= 2:
        assert y_lambda(c) == (y_lambda(lam) + dim_wreath(lam)) % 2


@given(multipartitions(n_max=10, r_max=6), st.integers(0, 10))
def test_adjacent_swap_property(lam, j):
    r = len(lam)
    if r < 2:
        return
    j %= r - 1
    perm = list(range(r))
    perm[j], perm[j + 1] = j + 1, j
    moved = apply_permutation(lam, perm)
    assert y_lambda(moved) == y_lambda(lam)
    assert x_lambda(moved) == (x_lambda(lam) + adjacent_swap_x_shift(lam, j)) % r


@settings(max_examples=200)
@given(multipartitions(n_max=10, r_max=6), st.integers(0, 2**32 - 1))
def test_reduced_word_shift(lam, seed):
    r = len(lam)
    perm = random_permutation(random.Random(seed), r)
    cur, x = lam, x_lambda(lam)
    for j in adjacent_word(perm):
        x = (x + adjacent_swap_x_shift(cur, j)) % r
        swap = list(range(r))
        swap[j], swap[j + 1] = j + 1, j
        cur = apply_permutation(cur, swap)
    assert cur == apply_permutation(lam, perm)
    assert x == x_lambda(cur)


def test_enumeration_sizes_and_order():
    comps = list(enumerate_compositions(3, 2))
    assert comps == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert len(list(enumerate_multipartitions(4, 3))) == 51
    first = next(iter(enumerate_multipartitions(3, 2)))
    assert first == ((3,), ())
    assert len(enumerate_partitions(5)) == 7
