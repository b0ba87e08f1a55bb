from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gcrystal.crystal_gt import (
    diamond,
    gt_decoration,
    gt_decoration_minors,
    gt_e,
    gt_e_explicit,
    gt_interlaces,
    gt_maps,
    gt_maps_explicit,
    gt_shape,
    phi_param,
    psi_param,
    scale_pattern,
)
from gcrystal.datatypes import GTPattern, MatrixGrid, gt_indices
from gcrystal.errors import CapabilityError, InputError
from gcrystal.matrices import m_of
from gcrystal.semifield import TropInt
from tests.conftest import grids, patterns, positive_rationals

F = Fraction

# P and Q of geometric RSK on [[1, 2], [3, 4], [5, 6]]
P = GTPattern(3, 2, {(1, 1): F(15), (1, 2): F(240, 11), (2, 2): F(33)})
Q = GTPattern(2, 3, {(1, 1): F(2), (1, 2): F(24, 5), (2, 2): F(5), (1, 3): F(240, 11), (2, 3): F(33)})


def pattern_strategy(m_max: int = 3, n_max: int = 4) -> st.SearchStrategy[GTPattern]:
    return patterns(m_max=m_max, n_max=n_max, n_min=2)


###########
# Patterns and Phi / Psi
###########


def test_indices() -> None:
    assert gt_indices(2, 3) == [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)]
    assert gt_indices(1, 2) == [(1, 1), (1, 2)]


def test_pattern_rejects_wrong_indices() -> None:
    with pytest.raises(InputError):
        GTPattern(2, 2, {(1, 1): F(1), (1, 2): F(1)})


def test_shape_is_the_last_row() -> None:
    assert gt_shape(P) == (F(240, 11), F(33))
    assert gt_shape(Q) == (F(240, 11), F(33))


@given(pattern_strategy())
def test_psi_inverts_phi(z: GTPattern) -> None:
    assert psi_param(phi_param(z), z.m) == z


@given(grids(m_max=3, n_max=4))
def test_phi_inverts_psi_on_whirl_products(x: MatrixGrid) -> None:
    a = m_of(x)
    assert phi_param(psi_param(a, x.m)) == a


def test_psi_is_not_tropical() -> None:
    z = GTPattern(1, 2, {(1, 1): TropInt(1), (1, 2): TropInt(2)})
    with pytest.raises(CapabilityError):
        psi_param(phi_param(z), 1)


###########
# Decoration
###########


def test_decoration_of_worked_pair() -> None:
    assert gt_decoration(P) == F(21, 11)
    assert gt_decoration(Q) == F(210, 11)


@given(pattern_strategy())
def test_decoration_minor_form(z: GTPattern) -> None:
    assert gt_decoration(z) == gt_decoration_minors(z)


@given(pattern_strategy(), positive_rationals, st.data())
def test_decoration_law(z: GTPattern, c: Fraction, data: st.DataObject) -> None:
    j = data.draw(st.integers(1, z.n - 1))
    d = gt_maps(z, j)
    assert gt_decoration(gt_e(z, j, c)) == gt_decoration(z) + (c - 1) * d.phi + (1 / c - 1) * d.eps


###########
# Crystal structure
###########


@given(pattern_strategy(), positive_rationals, positive_rationals, st.data())
def test_crystal_axioms(z: GTPattern, c: Fraction, c2: Fraction, data: st.DataObject) -> None:
    j = data.draw(st.integers(1, z.n - 1))
    before = gt_maps(z, j)
    moved = gt_e(z, j, c)
    after = gt_maps(moved, j)
    assert before.phi / before.eps == before.gamma[j - 1] / before.gamma[j]
    assert after.gamma[j - 1] == before.gamma[j - 1] * c
    assert after.gamma[j] == before.gamma[j] / c
    assert (after.eps, after.phi) == (before.eps / c, before.phi * c)
    assert moved.shape() == z.shape()
    assert gt_e(gt_e(z, j, c2), j, c) == gt_e(z, j, c * c2)


@given(patterns(m_max=3, n_max=3, n_min=3), positive_rationals, positive_rationals)
def test_verma_relation(z: GTPattern, c: Fraction, c2: Fraction) -> None:
    left = gt_e(gt_e(gt_e(z, 1, c2), 2, c * c2), 1, c)
    right = gt_e(gt_e(gt_e(z, 2, c), 1, c * c2), 2, c2)
    assert left == right


@given(pattern_strategy(), positive_rationals, st.data())
def test_scaling_commutes_with_e(z: GTPattern, c: Fraction, data: st.DataObject) -> None:
    j = data.draw(st.integers(1, z.n - 1))
    omega = [data.draw(positive_rationals) for _ in range(z.p)]
    assert gt_e(scale_pattern(z, omega), j, c) == scale_pattern(gt_e(z, j, c), omega)


def test_scale_pattern_needs_one_factor_per_diagonal() -> None:
    with pytest.raises(InputError):
        scale_pattern(P, [F(1)])


@given(pattern_strategy(m_max=4), positive_rationals, st.data())
def test_explicit_formulas(z: GTPattern, c: Fraction, data: st.DataObject) -> None:
    assume(z.m >= z.n)
    j = data.draw(st.integers(1, z.n - 1))
    assert gt_maps_explicit(z, j) == gt_maps(z, j)
    assert gt_e_explicit(z, j, c) == gt_e(z, j, c)


def test_explicit_formulas_need_full_patterns() -> None:
    with pytest.raises(InputError):
        gt_maps_explicit(Q, 1)


def test_matrix_route_is_not_tropical() -> None:
    z = GTPattern(2, 2, {(1, 1): TropInt(1), (1, 2): TropInt(2), (2, 2): TropInt(0)})
    with pytest.raises(CapabilityError):
        gt_e(z, 1, TropInt(1))
    assert gt_e_explicit(z, 1, TropInt(0)) == z


def test_index_out_of_range() -> None:
    with pytest.raises(InputError):
        gt_maps(P, 2)


def test_diamond() -> None:
    z = GTPattern(3, 3, {k: F(idx + 1) for idx, k in enumerate(gt_indices(3, 3))})
    # (1,1)=1 (1,2)=2 (2,2)=3 (1,3)=4 (2,3)=5 (3,3)=6
    assert diamond(z, 2, 2) == F(2 * 3, 1 * 5)


def test_interlacing() -> None:
    good = GTPattern(2, 2, {(1, 1): TropInt(1), (1, 2): TropInt(2), (2, 2): TropInt(0)})
    bad = GTPattern(2, 2, {(1, 1): TropInt(3), (1, 2): TropInt(2), (2, 2): TropInt(0)})
    assert gt_interlaces(good)
    assert not gt_interlaces(bad)
