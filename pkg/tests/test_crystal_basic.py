from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcrystal.crystal_basic import (
    decoration_matrix,
    e_col,
    e_op,
    e_row,
    geometric_r,
    kappa,
    product_e,
    product_maps,
    r_i,
    sigma,
    structure_maps,
    structure_maps_matrix,
    weyl_s,
)
from gcrystal.datatypes import CrystalData, MatrixGrid
from gcrystal.errors import InputError
from gcrystal.matrices import SfMatrix, chevalley, m_of, periodic_window
from gcrystal.semifield import GEOMETRIC, TropInt
from tests.conftest import grids, positive_rationals

F = Fraction
X = MatrixGrid.from_rows([[F(1), F(2)], [F(3), F(4)]])

axes = st.sampled_from(["rows", "columns"])


def grid(rows: list[list[int | Fraction]]) -> MatrixGrid:
    return MatrixGrid.from_rows([[F(v) for v in row] for row in rows])


###########
# Worked values on [[1, 2], [3, 4]]
###########


def test_sigma() -> None:
    """sigma(x_1, x_2; 1) = x_1^2 + x_2^1 = 5."""
    assert sigma(X.row(1), X.row(2), F(1), 0) == 5
    assert sigma(X.row(1), X.row(2), F(2), 1) == 2 * 2 + 3


def test_structure_maps() -> None:
    assert structure_maps(X, 1) == CrystalData((F(2), F(12)), F(12, 5), F(2, 5))


def test_structure_maps_matrix_route() -> None:
    assert structure_maps_matrix(X, 1) == structure_maps(X, 1)


def test_tropical_structure_maps() -> None:
    x = X.map(lambda v: TropInt(int(v)))
    expected = CrystalData((TropInt(3), TropInt(7)), TropInt(5), TropInt(1))
    assert structure_maps(x, 1) == expected
    assert structure_maps_matrix(x, 1) == expected


def test_e_row() -> None:
    assert e_row(X, 1, F(2)) == grid([[F(7, 5), F(20, 7)], [F(15, 7), F(14, 5)]])


def test_decoration_after_e_row() -> None:
    assert decoration_matrix(X) == 10
    assert decoration_matrix(e_row(X, 1, F(2))) == F(46, 5)


def test_m_of_is_fixed_by_e_row() -> None:
    assert m_of(e_row(X, 1, F(2))) == m_of(X)


def test_bad_index_and_axis() -> None:
    with pytest.raises(InputError):
        e_row(X, 2, F(2))
    with pytest.raises(InputError):
        e_op(X, 1, F(2), "diagonals")  # type: ignore[arg-type]
    with pytest.raises(InputError):
        sigma((F(1),), (F(1), F(2)), F(1), 0)


###########
# Crystal axioms
###########


@given(grids(m_min=2, n_min=2, m_max=4, n_max=4), axes, positive_rationals, positive_rationals, st.data())
def test_crystal_axioms(x: MatrixGrid, axis: str, c: Fraction, c2: Fraction, data: st.DataObject) -> None:
    """phi/eps = gamma_i/gamma_{i+1}, and e^c rescales gamma, eps and phi and composes multiplicatively."""
    size = x.m if axis == "rows" else x.n
    i = data.draw(st.integers(1, size - 1))
    before = structure_maps(x, i, axis)  # type: ignore[arg-type]
    moved = e_op(x, i, c, axis)  # type: ignore[arg-type]
    after = structure_maps(moved, i, axis)  # type: ignore[arg-type]
    assert before.phi / before.eps == before.gamma[i - 1] / before.gamma[i]
    assert after.gamma[i - 1] == before.gamma[i - 1] * c
    assert after.gamma[i] == before.gamma[i] / c
    assert after.eps == before.eps / c
    assert after.phi == before.phi * c
    assert e_op(e_op(x, i, c2, axis), i, c, axis) == e_op(x, i, c * c2, axis)  # type: ignore[arg-type]


@given(grids(m_min=3, n_min=1, m_max=4, n_max=3), positive_rationals, positive_rationals)
def test_verma_relation(x: MatrixGrid, c: Fraction, c2: Fraction) -> None:
    """e_1^c e_2^{cc'} e_1^{c'} = e_2^{c'} e_1^{cc'} e_2^c."""
    left = e_row(e_row(e_row(x, 1, c2), 2, c * c2), 1, c)
    right = e_row(e_row(e_row(x, 2, c), 1, c * c2), 2, c2)
    assert left == right


@given(grids(m_min=4, n_min=1, m_max=4, n_max=3), positive_rationals, positive_rationals)
def test_distant_operators_commute(x: MatrixGrid, c: Fraction, c2: Fraction) -> None:
    assert e_row(e_row(x, 1, c), 3, c2) == e_row(e_row(x, 3, c2), 1, c)


@given(grids(m_min=2, n_min=2), positive_rationals, positive_rationals, st.data())
def test_row_and_column_operators_commute(x: MatrixGrid, c: Fraction, c2: Fraction, data: st.DataObject) -> None:
    i = data.draw(st.integers(1, x.m - 1))
    j = data.draw(st.integers(1, x.n - 1))
    assert e_row(e_col(x, j, c2), i, c) == e_col(e_row(x, i, c), j, c2)


@given(grids(m_min=2, n_min=2), axes, positive_rationals, st.data())
def test_decoration_law(x: MatrixGrid, axis: str, c: Fraction, data: st.DataObject) -> None:
    i = data.draw(st.integers(1, (x.m if axis == "rows" else x.n) - 1))
    d = structure_maps(x, i, axis)  # type: ignore[arg-type]
    moved = e_op(x, i, c, axis)  # type: ignore[arg-type]
    assert decoration_matrix(moved) == decoration_matrix(x) + (c - 1) * d.phi + (1 / c - 1) * d.eps


@given(grids(m_min=2, n_min=2), axes, positive_rationals, st.data())
def test_unipotent_sandwich(x: MatrixGrid, axis: str, c: Fraction, data: st.DataObject) -> None:
    """The whirl product of the other axis transforms by x_i((c - 1) phi) M x_i((1/c - 1) eps)."""
    size = x.m if axis == "rows" else x.n
    i = data.draw(st.integers(1, size - 1))
    d = structure_maps(x, i, axis)  # type: ignore[arg-type]

    def whirls(y: MatrixGrid) -> SfMatrix:
        return m_of(y.transpose()) if axis == "rows" else m_of(y)

    left = chevalley(size, i, (c - 1) * d.phi, GEOMETRIC)
    right = chevalley(size, i, (1 / c - 1) * d.eps, GEOMETRIC)
    assert whirls(e_op(x, i, c, axis)) == left @ whirls(x) @ right  # type: ignore[arg-type]


@given(grids(m_min=2, n_min=1, m_max=4, n_max=4), axes, st.data())
def test_structure_map_routes_agree(x: MatrixGrid, axis: str, data: st.DataObject) -> None:
    size = x.m if axis == "rows" else x.n
    if size < 2:
        return
    i = data.draw(st.integers(1, size - 1))
    assert structure_maps(x, i, axis) == structure_maps_matrix(x, i, axis)  # type: ignore[arg-type]


###########
# Product crystals
###########


@given(grids(m_min=2, n_min=1, m_max=3, n_max=4), positive_rationals, st.data())
def test_row_crystal_is_a_product_of_columns(x: MatrixGrid, c: Fraction, data: st.DataObject) -> None:
    i = data.draw(st.integers(1, x.m - 1))
    factors = [x.col(b) for b in range(1, x.n + 1)]
    assert product_maps(factors, i) == structure_maps(x, i)
    moved = e_row(x, i, c)
    assert product_e(factors, i, c) == [moved.col(b) for b in range(1, x.n + 1)]


def test_product_needs_factors() -> None:
    with pytest.raises(InputError):
        product_maps([], 1)


###########
# Geometric R-matrix
###########


def test_kappa_and_r() -> None:
    x, y = [F(1), F(2)], [F(3), F(5)]
    assert kappa(x, y) == [5, 6]
    assert geometric_r(x, y) == ([F(18, 5), F(25, 6)], [F(5, 6), F(12, 5)])


@given(grids(m_min=2, n_min=1, m_max=3, n_max=3), st.data())
def test_r_is_the_weyl_reflection(x: MatrixGrid, data: st.DataObject) -> None:
    i = data.draw(st.integers(1, x.m - 1))
    assert r_i(x, i) == weyl_s(x, i)
    assert r_i(r_i(x, i), i) == x


@given(grids(m_min=3, n_min=1, m_max=3, n_max=3))
def test_r_braid_relation(x: MatrixGrid) -> None:
    assert r_i(r_i(r_i(x, 1), 2), 1) == r_i(r_i(r_i(x, 2), 1), 2)


@given(grids(m_min=2, n_min=1, m_max=3, n_max=3), st.data())
def test_periodic_window_is_r_invariant(x: MatrixGrid, data: st.DataObject) -> None:
    i = data.draw(st.integers(1, x.m - 1))
    span = range(1, x.m + x.n + 1)
    assert periodic_window(r_i(x, i), span, span) == periodic_window(x, span, span)


@given(grids(m_min=2, n_min=1, m_max=3, n_max=3), st.data())
def test_weyl_s_on_columns_is_an_involution(x: MatrixGrid, data: st.DataObject) -> None:
    if x.n < 2:
        return
    j = data.draw(st.integers(1, x.n - 1))
    assert weyl_s(weyl_s(x, j, "columns"), j, "columns") == x
