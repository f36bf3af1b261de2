import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import pentagonal_partition_count
from wreathdet.counting import (
    FormulaMismatch,
    NTable,
    canonical_compositions,
    chirality_split,
    chirality_split_brute,
    chirality_split_classes,
    column_names,
    count_chiral_sym,
    count_multipartitions,
    count_odd_sym,
    count_odd_sym_brute,
    count_odd_wreath,
    count_odd_wreath_brute,
    distinct_orderings,
    mp_sym,
    mp_wreath_brute,
    mp_wreath_formula,
    n_table_aggregate,
    n_table_for_composition,
    ordering_count,
    partition_series,
    series_pow,
    verify_inequalities,
)
from wreathdet.wreath import enumerate_multipartitions


def test_odd_sym():
    assert [count_odd_sym(n) for n in (1, 4, 6)] == [1, 4, 8]
    for n in range(0, 16):
        assert count_odd_sym(n) == count_odd_sym_brute(n)


def test_chiral_sym():
    # n = 4: (3,1), (2,2) and (1,1,1,1) have odd g; (4) and (2,1,1) do not
    assert [count_chiral_sym(n) for n in (2, 3, 4)] == [1, 2, 3]


def test_chirality_classes():
    assert chirality_split_classes(2) == (1, 1, 0)
    assert chirality_split_classes(3) == (1, 1, 1)
    assert chirality_split_classes(4) == (2, 2, 1)
    for n in range(5, 13):
        chirality_split_classes(n)


def test_odd_wreath_examples():
    assert count_odd_wreath(1, 7) == 7
    assert count_odd_wreath(2, 3) == 6 == count_odd_wreath_brute(2, 3)
    assert count_odd_wreath(4, 2) == 8 == count_odd_wreath_brute(4, 2)


def test_mp_examples():
    assert mp_sym(4, 2) == 4
    assert mp_sym(3, 3) == 3
    assert mp_sym(1, 5) == 1
    assert mp_wreath_formula(1, 3, 7) == 3
    assert mp_wreath_formula(2, 2, 2) == 4 == mp_wreath_brute(2, 2, 2)
    assert mp_wreath_formula(0, 4, 3) == 1 == mp_wreath_brute(0, 4, 3)
    with pytest.raises(ValueError):
        mp_wreath_formula(3, 2, 4)
    with pytest.raises(ValueError):
        mp_sym(3, 1)


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_mp_formula_small(r, p):
    for n in range(0, 9):
        assert mp_wreath_formula(n, r, p) == mp_wreath_brute(n, r, p)


def test_series():
    ps = partition_series(12)
    assert ps[0] == 1
    assert ps == [pentagonal_partition_count(k) for k in range(13)]
    assert series_pow(ps, 3, 4)[4] == 51
    assert series_pow(ps, 0, 5) == [1, 0, 0, 0, 0, 0]
    for n in range(6):
        assert count_multipartitions(n, 3) == sum(1 for _ in enumerate_multipartitions(n, 3))


def test_chirality_split_examples():
    assert chirality_split((1, 1)).A1 == 1
    assert chirality_split((2, 0)).A1 == 1
    for n in range(2, 10):
        assert chirality_split((n,)).A1 == count_chiral_sym(n)


@given(st.integers(0, 8).flatmap(lambda n: st.sampled_from([2, 3, 4, 5]).flatmap(
    lambda r: st.sampled_from(canonical_compositions(n, r)))))
def test_chirality_split_matches_brute(a):
    f, b = chirality_split(a), chirality_split_brute(a)
    assert (f.A0, f.A1) == (b.A0, b.A1)
    assert f.A0 + f.A1 > 0


def test_orderings():
    assert list(distinct_orderings((2, 1, 1))) == [(2, 1, 1), (1, 2, 1), (1, 1, 2)]
    assert ordering_count((2, 1, 1)) == 3
    assert ordering_count((3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)) == 11
    assert len(list(distinct_orderings((2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0)))) == 110
    for a in [(3, 2, 2, 0, 0), (1, 1, 1, 1), (4, 0, 0)]:
        assert len(set(distinct_orderings(a))) == ordering_count(a) == len(list(distinct_orderings(a)))


def test_composition_table_examples():
    t = n_table_for_composition((1, 1, 0), 3)
    assert t.total == 3
    assert "small_n" in t.formulas
    t = n_table_for_composition((2, 0), 2)
    assert t.values == [1, 1, 1, 1]
    t = n_table_for_composition((4, 0, 0), 3)
    assert t.total == 3 * 5
    with pytest.raises(ValueError):
        n_table_for_composition((0, 1, 1), 3)


def test_composition_tables_assert_formulas():
    for r in (3, 5):
        for n in range(1, 9):
            for a in canonical_compositions(n, r):
                t = n_table_for_composition(a, r)
                assert "orbit_sums" in t.formulas


def test_aggregate_examples():
    assert n_table_aggregate(2, 2).values == [1, 1, 2, 1]
    assert n_table_aggregate(3, 3).values == [1, 4, 4, 5, 5, 3]
    t = n_table_aggregate(4, 5)
    assert t.values == [11] * 5 + [27] * 5


def test_aggregate_is_independent_of_workers():
    a = n_table_aggregate(9, 5, workers=1)
    b = n_table_aggregate(9, 5, workers=3)
    assert a.counts == b.counts and a.csv_row() == b.csv_row()


def test_ntable_csv():
    t = n_table_aggregate(2, 3)
    assert NTable.csv_header(3) == ["n", "r", "scope", "N_1", "N_zeta_1", "N_zeta_2", "N_negzeta_1", "N_negzeta_2", "N_neg1", "total"]
    assert t.csv_row() == ["2", "3", "aggregate", "1", "1", "1", "2", "2", "2", "9"]
    assert column_names(2) == ["N_1", "N_zeta_1", "N_negzeta_1", "N_neg1"]


def test_inequality_examples():
    res = {c.name: c for c in verify_inequalities(2, 3)}
    assert all(c.passed for c in res.values())
    res = {c.name: c for c in verify_inequalities(6, 5)}
    assert res["equal_nontrivial_zeta"].passed and res["bounded_by_trivial"].passed
    assert not res["equal_all_small_n"].applicable
    for r in (3, 5, 7):
        t = n_table_aggregate(1, r)
        assert t[(0, 0)] == 1 and t[(0, 1)] == 0
        assert all(c.passed for c in verify_inequalities(1, r, t))
    with pytest.raises(ValueError):
        verify_inequalities(3, 2)


def test_formula_mismatch_is_assertion():
    assert issubclass(FormulaMismatch, AssertionError)
