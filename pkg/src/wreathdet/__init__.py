"""Determinant characters of the irreducible representations of the
generalized symmetric group G(n, r) = Z_r wr S_n, with exhaustive
enumeration as the reference for every closed formula."""
from .classify import ClassificationVerdict, realized_values, residue_class_test, table1_classify, y_parity_conditions
from .counting import (
    ChiralitySplit,
    FormulaMismatch,
    NTable,
    chirality_split,
    count_chiral_sym,
    count_multipartitions,
    count_odd_sym,
    count_odd_wreath,
    mp_sym,
    mp_wreath_brute,
    mp_wreath_formula,
    n_table_aggregate,
    n_table_for_composition,
    verify_inequalities,
)
from .partitions import (
    binary_profile,
    chirality,
    conjugate,
    dim_sym,
    enumerate_partitions,
    multinomial_exact,
    multinomial_mod_p_lucas,
    transposition_character,
)
from .wreath import (
    DetCharacter,
    TransferImage,
    WreathParams,
    apply_conjugation,
    apply_permutation,
    char_at_e1,
    char_at_s1,
    det_irrep,
    det_via_eigenvalues,
    dim_wreath,
    enumerate_multipartitions,
    transfer_image,
    x_lambda,
    y_lambda,
)
