"""Analytic engine: triangle rule, marginal induction, triangle fills,
border, symmetry, and equivalence with the enumeration oracle."""

import pytest

from secant_trees.distributions import JointMatrix
from secant_trees.recurrence import (
    MissingPredecessorError,
    MissingUpperError,
    NegativeCellError,
    RecurrenceEngine,
    assemble,
    check_symmetry,
    column_sums,
    entringer_triangle,
    lower_border,
    secant_numbers,
    tree_count,
    upper_triangle,
)
from secant_trees.reference_tables import (
    REFERENCE_TRIANGLE,
    REFERENCE_TREE_COUNTS,
    SECANT_NUMBERS,
)


# ---------------------------------------------------------------------- #
# triangle rule and secant numbers                                        #
# ---------------------------------------------------------------------- #


def test_triangle_rows_match_reference():
    tri = entringer_triangle(8)
    for n, row in REFERENCE_TRIANGLE.items():
        assert tri.row(n) == row


def test_triangle_row_sums_are_tree_counts():
    tri = entringer_triangle(10)
    for n in range(2, 11):
        assert tri.row_total(n) == REFERENCE_TREE_COUNTS[n]


def test_secant_numbers():
    assert secant_numbers(10) == (1, 1, 5, 61, 1385, 50521)
    assert secant_numbers(12) == SECANT_NUMBERS
    assert secant_numbers(0) == (1,)


def test_tree_count_small():
    assert [tree_count(n) for n in range(11)] == list(REFERENCE_TREE_COUNTS)


# ---------------------------------------------------------------------- #
# marginal induction                                                      #
# ---------------------------------------------------------------------- #


def test_column_sums_base_case():
    assert column_sums(2) == (1,)


def test_column_sums_examples():
    cs8 = RecurrenceEngine().column_sums(8)
    assert cs8 == (61, 183, 285, 327, 285, 183, 61)
    cs10 = column_sums(10, prev=cs8)
    assert cs10 == (1385, 4155, 6681, 8475, 9129, 8475, 6681, 4155, 1385)
    # one induction step by hand: 2 * 4155 - 1385 - 4 * 61
    assert cs10[2] == 2 * cs10[1] - cs10[0] - 4 * cs8[0] == 6681


def test_column_sums_need_predecessor():
    with pytest.raises(MissingPredecessorError):
        column_sums(10)
    with pytest.raises(MissingPredecessorError):
        column_sums(10, prev=(1, 2, 3))


# ---------------------------------------------------------------------- #
# upper triangle                                                          #
# ---------------------------------------------------------------------- #


def _engine_parts(two_n):
    eng = RecurrenceEngine()
    prev = eng.assemble(two_n - 2)
    return eng, prev, eng.column_sums(two_n - 2)


def test_upper_triangle_examples():
    eng, prev, prev_cs = _engine_parts(8)
    up = upper_triangle(8, prev, prev_cs)
    assert up.get(4, 5) == 2 * 63 - 21 - 4 * prev.get(4, 5) == 101
    assert up.get(2, 5) == 21
    eng, prev, prev_cs = _engine_parts(4)
    assert upper_triangle(4, prev, prev_cs).get(2, 3) == 1


@pytest.mark.parametrize("two_n", (4, 6, 8, 10, 12))
def test_filling_order_independence(two_n):
    eng, prev, prev_cs = _engine_parts(two_n)
    by_column = upper_triangle(two_n, prev, prev_cs, rule="column")
    by_row = upper_triangle(two_n, prev, prev_cs, rule="row")
    assert by_column.same_counts(by_row)


def test_upper_triangle_rejects_incomplete_predecessor():
    partial = JointMatrix(6, method="recurrence")
    with pytest.raises(MissingPredecessorError):
        upper_triangle(8, partial, (5, 15, 21, 15, 5))
    eng, prev, _ = _engine_parts(8)
    with pytest.raises(MissingPredecessorError):
        upper_triangle(8, prev, (1, 2))


def test_upper_triangle_flags_negative_cells():
    eng, prev, prev_cs = _engine_parts(8)
    corrupt = JointMatrix(6, method="recurrence")
    for m, k, v in prev.known_cells():
        corrupt.set(m, k, v)
    corrupt.set(4, 5, 10 ** 6)  # forces the interior fill negative
    with pytest.raises(NegativeCellError):
        upper_triangle(8, corrupt, prev_cs)


# ---------------------------------------------------------------------- #
# lower border                                                            #
# ---------------------------------------------------------------------- #


def test_lower_border_examples():
    eng, prev, prev_cs = _engine_parts(8)
    up = upper_triangle(8, prev, prev_cs)
    M = lower_border(8, up, eng.entringer_row(6))
    assert M.get(4, 3) == M.get(3, 2) + M.get(3, 4) - M.get(2, 3) == 50
    assert M.get(8, 4) == 14
    assert M.get(3, 2) == 2 * M.get(3, 1) == 10


def test_lower_border_needs_full_upper():
    eng, prev, prev_cs = _engine_parts(8)
    up = upper_triangle(8, prev, prev_cs)
    hole = JointMatrix(8, method="recurrence")
    for m, k, v in up.known_cells():
        if (m, k) != (4, 5):
            hole.set(m, k, v)
    with pytest.raises(MissingUpperError):
        lower_border(8, hole, eng.entringer_row(6))


# ---------------------------------------------------------------------- #
# assembled matrices vs the oracle                                        #
# ---------------------------------------------------------------------- #


def test_assemble_unknown_cell_counts():
    assert assemble(4).is_complete()
    A8 = assemble(8)
    unknown = set(A8.unknown_cells())
    assert len(unknown) == 10
    assert all(m > k + 1 for m, k in unknown)


@pytest.mark.parametrize("two_n", (4, 6, 8, 10))
def test_assemble_matches_oracle_on_known_cells(two_n, brute):
    A = assemble(two_n)
    B = brute(two_n)
    for m, k, v in A.known_cells():
        assert v == B.get(m, k), (m, k)
    assert A.col_sums() == B.col_sums()
    assert A.total() == B.total()


def test_assemble_fill_interior_equals_oracle(brute):
    H = assemble(8, fill_interior=True)
    assert H.method == "hybrid"
    assert H.same_counts(brute(8))


def test_engine_caches_are_consistent():
    eng = RecurrenceEngine()
    A = eng.assemble(10)
    assert eng.assemble(10) is A
    assert eng.assemble(6).total() == 61


# ---------------------------------------------------------------------- #
# symmetry and crossing                                                   #
# ---------------------------------------------------------------------- #


def test_symmetry_examples(brute):
    M8 = brute(8)
    assert M8.get(2, 5) == M8.get(4, 7) == 21
    assert M8.get(3, 2) == M8.get(7, 6) == 10
    assert check_symmetry(brute(2)) == []


@pytest.mark.parametrize("two_n", (2, 4, 6, 8, 10))
def test_symmetry_holds_on_oracle(two_n, brute):
    assert check_symmetry(brute(two_n)) == []


def test_symmetry_reports_violations():
    M = JointMatrix(4, method="brute")
    for m in range(2, 5):
        for k in range(1, 4):
            M.set(m, k, 0)
    M.set(2, 2, 7)  # mirror cell is (3, 3), still 0
    bad = check_symmetry(M)
    assert bad and bad[0][0] == (2, 2)


@pytest.mark.parametrize("two_n", (4, 6, 8, 10))
def test_crossing_equalities_on_oracle(two_n, brute):
    M = brute(two_n)
    for k in range(3, two_n - 1):
        assert M.get(k - 1, k) + M.get(k + 1, k) == M.get(k, k - 1) + M.get(k, k + 1)
