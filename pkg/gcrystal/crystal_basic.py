"""
The basic geometric crystal on m x n matrices.

GL_m acts through the rows (operators e_i^c mixing rows i and i + 1) and GL_n through the
columns. Both are computed by the same subtraction-free sigma formulas, so every function
here also runs over TropInt.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any, Literal

from gcrystal.datatypes import CrystalData, MatrixGrid
from gcrystal.errors import InputError
from gcrystal.matrices import m_of
from gcrystal.semifield import Semifield, semifield_of

logger = logging.getLogger(__name__)

Axis = Literal["rows", "columns"]


def _check_axis_index(x: MatrixGrid, i: int, axis: Axis) -> MatrixGrid:
    """Return the grid oriented so that {axis} runs over its rows, after validating {i}."""
    match axis:
        case "rows":
            oriented = x
        case "columns":
            oriented = x.transpose()
        case _:
            raise InputError(f"unknown axis {axis!r}")
    if not 1 <= i < oriented.m:
        raise InputError(f"crystal index {i} out of range for {oriented.m} {axis}")
    return oriented


def sigma(x: Sequence[Any], y: Sequence[Any], c: Any, j: int, sf: Semifield | None = None) -> Any:
    """
    sigma^j(x, y; c) = sum over r of c^{[r <= j]} y^1 ... y^{r-1} x^{r+1} ... x^n.
    At c = one the value does not depend on {j}.
    """
    n = len(x)
    if len(y) != n:
        raise InputError("sigma needs rows of equal length")
    if not 0 <= j <= n:
        raise InputError(f"sigma index {j} out of range [0, {n}]")
    sf = sf or semifield_of(x[0])
    suffix = [sf.one] * (n + 1)
    for r in range(n - 1, -1, -1):
        suffix[r] = suffix[r + 1] * x[r]
    total = sf.zero
    prefix = sf.one
    for r in range(1, n + 1):
        term = prefix * suffix[r]
        total = total + (c * term if r <= j else term)
        prefix = prefix * y[r - 1]
    return total


def structure_maps(x: MatrixGrid, i: int, axis: Axis = "rows") -> CrystalData:
    """gamma = products along {axis}, eps_i = pi_{i+1}/sigma(x_i, x_{i+1}), phi_i = pi_i/sigma."""
    g = _check_axis_index(x, i, axis)
    sf = g.semifield
    gamma = tuple(sf.product(g.row(k)) for k in range(1, g.m + 1))
    s = sigma(g.row(i), g.row(i + 1), sf.one, 0, sf)
    return CrystalData(gamma, gamma[i] / s, gamma[i - 1] / s)


def structure_maps_matrix(x: MatrixGrid, i: int, axis: Axis = "rows") -> CrystalData:
    """
    The same maps read off the whirl product of the other axis: with M = M(x^t) for the
    row crystal (M(x) for the column crystal), gamma = diag(M),
    eps_i = M_{i+1,i+1}/M_{i+1,i} and phi_i = M_{i,i}/M_{i+1,i}.
    """
    g = _check_axis_index(x, i, axis)
    mat = m_of(g.transpose())
    gamma = tuple(mat.entry(k, k) for k in range(1, mat.rows + 1))
    below = mat.entry(i + 1, i)
    return CrystalData(gamma, mat.entry(i + 1, i + 1) / below, mat.entry(i, i) / below)


def e_row(x: MatrixGrid, i: int, c: Any) -> MatrixGrid:
    """
    e_i^c on rows i and i + 1: x_i^j is multiplied by sigma^j/sigma^{j-1} and x_{i+1}^j by the
    reciprocal, where sigma^j = sigma^j(x_i, x_{i+1}; c). Other rows are untouched.
    """
    _check_axis_index(x, i, "rows")
    sf = x.semifield
    upper, lower = x.row(i), x.row(i + 1)
    sigmas = [sigma(upper, lower, c, j, sf) for j in range(x.n + 1)]
    new_upper = [v * sigmas[j] / sigmas[j - 1] for j, v in enumerate(upper, start=1)]
    new_lower = [v * sigmas[j - 1] / sigmas[j] for j, v in enumerate(lower, start=1)]
    logger.debug("e_row i=%s c=%s sigmas=%s", i, c, sigmas)
    return x.with_rows({i: new_upper, i + 1: new_lower})


def e_col(x: MatrixGrid, j: int, c: Any) -> MatrixGrid:
    """The column operator ebar_j^c: e_row on the transpose."""
    return e_row(x.transpose(), j, c).transpose()


def e_op(x: MatrixGrid, i: int, c: Any, axis: Axis = "rows") -> MatrixGrid:
    match axis:
        case "rows":
            return e_row(x, i, c)
        case "columns":
            return e_col(x, i, c)
        case _:
            raise InputError(f"unknown axis {axis!r}")


def decoration_matrix(x: MatrixGrid) -> Any:
    """F(x) = sum of all entries."""
    return x.semifield.sum(x.values())


def weyl_s(x: MatrixGrid, i: int, axis: Axis = "rows") -> MatrixGrid:
    """s_i(x) = e_i^{eps_i(x)/phi_i(x)}(x). An involution."""
    data = structure_maps(x, i, axis)
    return e_op(x, i, data.eps / data.phi, axis)


###########
# Geometric R-matrix
###########


def kappa(x: Sequence[Any], y: Sequence[Any], sf: Semifield | None = None) -> list[Any]:
    """
    kappa_r = sum_{k=0}^{n-1} y_r ... y_{r+k-1} x_{r+k+1} ... x_{r+n-1}, indices mod n.
    Returned 0-based: kappa(x, y)[r - 1] is kappa_r.
    """
    n = len(x)
    if len(y) != n:
        raise InputError("kappa needs rows of equal length")
    sf = sf or semifield_of(x[0])
    out = []
    for r in range(n):
        total = sf.zero
        for k in range(n):
            ys = sf.product(y[(r + t) % n] for t in range(k))
            xs = sf.product(x[(r + t) % n] for t in range(k + 1, n))
            total = total + ys * xs
        out.append(total)
    return out


def geometric_r(x: Sequence[Any], y: Sequence[Any]) -> tuple[list[Any], list[Any]]:
    """R(x, y) = (y', x') with y'_j = y_j kappa_{j+1}/kappa_j and x'_j = x_j kappa_j/kappa_{j+1}."""
    sf = semifield_of(x[0])
    ks = kappa(x, y, sf)
    n = len(x)
    y_new = [y[j] * ks[(j + 1) % n] / ks[j] for j in range(n)]
    x_new = [x[j] * ks[j] / ks[(j + 1) % n] for j in range(n)]
    return y_new, x_new


def r_i(x: MatrixGrid, i: int) -> MatrixGrid:
    """R_i: replace rows (x_i, x_{i+1}) by R(x_i, x_{i+1})."""
    _check_axis_index(x, i, "rows")
    y_new, x_new = geometric_r(x.row(i), x.row(i + 1))
    return x.with_rows({i: y_new, i + 1: x_new})


###########
# Products of one-column crystals
###########


def _column_maps(a: Sequence[Any], i: int) -> CrystalData:
    return CrystalData(tuple(a), a[i], a[i - 1])


def _column_e(a: Sequence[Any], i: int, c: Any) -> tuple[Any, ...]:
    out = list(a)
    out[i - 1] = out[i - 1] * c
    out[i] = out[i] / c
    return tuple(out)


def product_maps(factors: Sequence[Sequence[Any]], i: int) -> CrystalData:
    """
    Structure maps of the product crystal x^1 x ... x x^n of one-column GL_m crystals,
    folded from the right with eps(x, x') = eps(x)eps(x')/(eps(x) + phi(x')) and the
    symmetric rule for phi.
    """
    if not factors:
        raise InputError("a product crystal needs at least one factor")
    if not 1 <= i < len(factors[0]):
        raise InputError(f"crystal index {i} out of range")
    head = _column_maps(factors[0], i)
    if len(factors) == 1:
        return head
    rest = product_maps(factors[1:], i)
    denom = head.eps + rest.phi
    gamma = tuple(a * b for a, b in zip(head.gamma, rest.gamma))
    return CrystalData(gamma, head.eps * rest.eps / denom, head.phi * rest.phi / denom)


def product_e(factors: Sequence[Sequence[Any]], i: int, c: Any) -> list[tuple[Any, ...]]:
    """e^c on the product: e^{c+} on the first factor and e^{c/c+} on the rest, c+ = (c phi' + eps)/(phi' + eps)."""
    if len(factors) == 1:
        return [_column_e(factors[0], i, c)]
    head = _column_maps(factors[0], i)
    rest = product_maps(factors[1:], i)
    c_plus = (c * rest.phi + head.eps) / (rest.phi + head.eps)
    return [_column_e(factors[0], i, c_plus)] + product_e(factors[1:], i, c / c_plus)
