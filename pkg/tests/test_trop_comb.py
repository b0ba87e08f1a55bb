from collections import Counter, defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcrystal.crystal_basic import Axis
from gcrystal.datatypes import GTPattern, Tableau, gt_indices
from gcrystal.errors import InputError, NotSemistandard
from gcrystal.grsk import split
from gcrystal.trop_comb import (
    Direction,
    comb_crystal_oracle,
    gt_to_tableau,
    int_rows,
    matrices_with_row_sums,
    pattern_charge,
    q_analogue,
    recording_charges_from_matrices,
    recording_patterns,
    row_insert,
    schensted_rsk,
    tableau_crystal_e,
    tableau_to_gt,
    trop_central_charge,
    trop_crystal_e,
    trop_grsk,
    trop_grsk_oracle,
    trop_gt_e,
)
from tests.conftest import int_matrices

A = [[1, 4], [2, 1], [1, 0]]


def _key(q: GTPattern) -> tuple[int, ...]:
    return tuple(int(q[k]) for k in gt_indices(q.m, q.n))


###########
# Classical RSK
###########


def test_row_insert_bumps_into_the_next_row() -> None:
    rows = [[1, 2, 2]]
    assert row_insert(rows, 1) == 1
    assert rows == [[1, 1, 2], [2]]
    assert row_insert(rows, 3) == 0
    assert rows == [[1, 1, 2, 3], [2]]


class TestSchensted:
    def test_worked_example(self) -> None:
        p, q = schensted_rsk(A)
        assert str(p) == "111122/222"
        assert str(q) == "111112/223"

    def test_shapes_agree(self) -> None:
        p, q = schensted_rsk(A)
        assert p.shape == q.shape == (6, 3)
        assert p.content(2) == (4, 5)
        assert q.content(3) == (5, 3, 1)

    def test_negative_entries_are_rejected(self) -> None:
        with pytest.raises(InputError):
            schensted_rsk([[1, -1]])

    def test_zero_matrix_gives_empty_tableaux(self) -> None:
        assert schensted_rsk([[0, 0], [0, 0]]) == (Tableau(), Tableau())


class TestPatternConversion:
    def test_tableau_to_gt(self) -> None:
        p, _ = schensted_rsk(A)
        a = tableau_to_gt(p, 2, 3)
        assert {k: int(a[k]) for k in gt_indices(3, 2)} == {(1, 1): 4, (1, 2): 6, (2, 2): 3}

    def test_back_to_the_tableau(self) -> None:
        p, q = schensted_rsk(A)
        assert gt_to_tableau(tableau_to_gt(p, 2, 3)) == p
        assert gt_to_tableau(tableau_to_gt(q, 3, 2)) == q

    def test_not_semistandard(self) -> None:
        with pytest.raises(NotSemistandard):
            tableau_to_gt(Tableau(((2, 1),)), 2, 2)

    def test_entries_too_large(self) -> None:
        with pytest.raises(NotSemistandard):
            tableau_to_gt(Tableau(((1, 3),)), 2, 2)


###########
# Tropical gRSK
###########


def test_trop_grsk_worked_example() -> None:
    assert int_rows(trop_grsk(A)) == [[2, 5], [3, 6], [4, 6]]
    assert trop_grsk_oracle(A) == trop_grsk(A)


@given(int_matrices())
def test_trop_grsk_is_schensted(a: list[list[int]]) -> None:
    """The local moves over (min, +) reproduce the glued Schensted pair."""
    assert trop_grsk(a) == trop_grsk_oracle(a)


@given(int_matrices())
def test_trop_grsk_of_transpose(a: list[list[int]]) -> None:
    pq = split(trop_grsk(a))
    pq_t = split(trop_grsk([list(col) for col in zip(*a)]))
    assert (pq_t.P, pq_t.Q) == (pq.Q, pq.P)


###########
# Crystal operators
###########


class TestCombinatorialOperators:
    def test_raise_on_rows(self) -> None:
        assert comb_crystal_oracle([[1, 0], [0, 1]], 1, "raise") == [[1, 1], [0, 0]]
        assert trop_crystal_e([[1, 0], [0, 1]], 1, "raise") == [[1, 1], [0, 0]]

    def test_undefined_at_the_edge(self) -> None:
        assert comb_crystal_oracle([[1, 1], [0, 0]], 1, "raise") is None
        assert trop_crystal_e([[1, 1], [0, 0]], 1, "raise") is None

    def test_bad_arguments(self) -> None:
        with pytest.raises(InputError):
            comb_crystal_oracle([[1], [1]], 1, "sideways")  # type: ignore[arg-type]
        with pytest.raises(InputError):
            comb_crystal_oracle([[1], [1]], 2, "raise")
        with pytest.raises(InputError):
            trop_crystal_e([[1], [-1]], 1, "raise")


class TestTableauCrystal:
    def test_single_box(self) -> None:
        assert tableau_crystal_e(Tableau(((2,),)), 1, "raise", 2) == Tableau(((1,),))
        assert tableau_crystal_e(Tableau(((1,),)), 1, "lower", 2) == Tableau(((2,),))

    def test_column_word_is_undefined_both_ways(self) -> None:
        """The word 21 is killed by e_1 and by f_1."""
        column = Tableau(((1,), (2,)))
        assert tableau_crystal_e(column, 1, "raise", 2) is None
        assert tableau_crystal_e(column, 1, "lower", 2) is None

    def test_empty_tableau(self) -> None:
        assert tableau_crystal_e(Tableau(), 1, "raise", 2) is None

    def test_index_range(self) -> None:
        with pytest.raises(InputError):
            tableau_crystal_e(Tableau(((1,),)), 2, "raise", 2)


class TestTropicalGTOperators:
    def test_single_box(self) -> None:
        raised = trop_gt_e(tableau_to_gt(Tableau(((2,),)), 2, 2), 1, "raise")
        assert raised is not None
        assert gt_to_tableau(raised) == Tableau(((1,),))
        lowered = trop_gt_e(tableau_to_gt(Tableau(((1,),)), 2, 2), 1, "lower")
        assert lowered is not None
        assert gt_to_tableau(lowered) == Tableau(((2,),))

    def test_column_is_undefined_both_ways(self) -> None:
        a = tableau_to_gt(Tableau(((1,), (2,))), 2, 2)
        assert trop_gt_e(a, 1, "raise") is None
        assert trop_gt_e(a, 1, "lower") is None


@given(int_matrices(m_min=2, n_min=2), st.sampled_from(["rows", "columns"]), st.sampled_from(["raise", "lower"]))
def test_tropical_operators_cut_to_combinatorial_ones(a: list[list[int]], axis: Axis, direction: Direction) -> None:
    size = len(a) if axis == "rows" else len(a[0])
    for i in range(1, size):
        assert trop_crystal_e(a, i, direction, axis) == comb_crystal_oracle(a, i, direction, axis)


@given(int_matrices(m_min=2, n_min=2), st.sampled_from(["raise", "lower"]))
def test_column_operators_act_on_the_insertion_tableau(a: list[list[int]], direction: Direction) -> None:
    p, q = schensted_rsk(a)
    n = len(a[0])
    for j in range(1, n):
        b = comb_crystal_oracle(a, j, direction, "columns")
        t = tableau_crystal_e(p, j, direction, n)
        assert (b is None) == (t is None)
        if b is not None:
            assert schensted_rsk(b) == (t, q)


###########
# Central charge
###########


class TestQAnalogue:
    def test_three_rows_two_columns(self) -> None:
        assert q_analogue((4, 3, 2), 2) == [
            ((9, 0), {0: 1}),
            ((8, 1), {0: 2}),
            ((7, 2), {0: 2, 1: 1}),
            ((6, 3), {0: 2, 1: 1}),
            ((5, 4), {0: 2}),
        ]

    @pytest.mark.parametrize("content", [(2, 2), (3, 2), (4, 3), (5, 4), (3, 3)])
    def test_square_case(self, content: tuple[int, int]) -> None:
        """For m = n = 2 the shape (mu_1 + mu_2 - k, k) appears once with charge min(k, mu_2 - k)."""
        mu_1, mu_2 = content
        expected = [((mu_1 + mu_2 - k, k), {min(k, mu_2 - k): 1}) for k in range(mu_2 + 1)]
        assert q_analogue(content, 2) == expected

    def test_bad_content(self) -> None:
        with pytest.raises(InputError):
            list(recording_patterns((), 2))
        with pytest.raises(InputError):
            list(recording_patterns((1, -1), 2))

    @pytest.mark.parametrize("content, n", [((2, 1), 2), ((1, 1, 1), 2), ((2, 2), 3), ((3, 2, 1), 3), ((2, 0, 2), 2)])
    def test_pattern_charges_match_tropical_grsk(self, content: tuple[int, ...], n: int) -> None:
        """Every recording pattern comes from some matrix, with the charge trop_central_charge gives it."""
        from_matrices = recording_charges_from_matrices(content, n)
        from_patterns = {_key(q): pattern_charge(q) for q in recording_patterns(content, n)}
        assert from_matrices == from_patterns

    def test_table_from_all_matrices(self) -> None:
        content, n = (4, 3, 2), 2
        table: dict[tuple[int, ...], Counter[int]] = defaultdict(Counter)
        seen: set[tuple[int, ...]] = set()
        for a in matrices_with_row_sums(content, n):
            q = split(trop_grsk(a)).Q
            if _key(q) not in seen:
                seen.add(_key(q))
                table[tuple(int(v) for v in q.shape())][trop_central_charge(a)] += 1
        rebuilt = [(shape, dict(sorted(table[shape].items()))) for shape in sorted(table, reverse=True)]
        assert rebuilt == q_analogue(content, n)


def test_matrices_with_row_sums() -> None:
    mats = list(matrices_with_row_sums((1, 2), 2))
    assert len(mats) == 6
    assert [[1, 0], [2, 0]] in mats
    assert all(sum(row) == s for mat in mats for row, s in zip(mat, (1, 2)))


@given(int_matrices(entry_max=2))
def test_central_charge_is_nonnegative(a: list[list[int]]) -> None:
    assert trop_central_charge(a) >= 0
