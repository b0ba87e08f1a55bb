"""
Geometric RSK.

Two formulations are kept side by side: flag-minor ratios of the whirl products
M(x_1, ..., x_k) (grsk_insert), and the subtraction-free local moves eta and T
(grsk_local). The local moves work over any carrier, which is how the tropical
correspondence is computed.

The glued matrix holds P in the bottom-left corner and the transpose of Q in the
top-right corner; the two regions share the diagonal that carries the common shape.
"""
from __future__ import annotations

import logging
from collections.abc import Iterator
from typing import Any, Literal

from gcrystal.crystal_basic import decoration_matrix
from gcrystal.crystal_gt import gt_decoration, psi_param
from gcrystal.datatypes import GTPattern, MatrixGrid, MinorIndex, PQPair, gt_indices
from gcrystal.errors import ForbiddenToggle, InputError, VanishingMinor
from gcrystal.matrices import SfMatrix, flag_minor, h_matrix, interval, minor, prefix_products
from gcrystal.semifield import gmax

logger = logging.getLogger(__name__)

Order = Literal["rows", "columns"]
MoveKind = Literal["eta", "T"]


###########
# Minor formulas
###########


def _recording(products: list[SfMatrix], n: int) -> GTPattern:
    """z'_{j',i'} = Delta_{[j',n]}(M_{i'}) / Delta_{[j'+1,n]}(M_{i'}) where M_{i'} is the i'th prefix product."""
    sf = products[0].semifield
    entries = {}
    for j, i in gt_indices(n, len(products)):
        mat = products[i - 1]
        den = flag_minor(mat, interval(j + 1, n))
        if sf.is_zero(den):
            raise VanishingMinor(f"Delta_[{j + 1},{n}] of the prefix product M_{i} vanishes")
        entries[(j, i)] = flag_minor(mat, interval(j, n)) / den
    return GTPattern(n, len(products), entries)


def grsk_insert(x: MatrixGrid) -> PQPair:
    """
    gRSK(x) = (P, Q): P = Psi(M(x)) and the k-th diagonal of Q is the shape of Psi(M(x_1, ..., x_k)).
    Prefix products are built incrementally.
    """
    products = prefix_products(x)
    return PQPair(psi_param(products[-1], x.m), _recording(products, x.n))


def grsk_insert_by_columns(x: MatrixGrid) -> PQPair:
    """
    The transposed formulas, using the m x m column products M(x^1, ..., x^j):
    z_{i,j} = Delta_{[i,m]}(M(x^1..x^j))/Delta_{[i+1,m]}(...) and Q = Psi(M(x^1..x^n)).
    """
    products = prefix_products(x.transpose())
    return PQPair(_recording(products, x.m), psi_param(products[-1], x.n))


###########
# Local moves
###########


def gmax_at(x: MatrixGrid, a: int, b: int) -> Any:
    sf = x.semifield
    match (a > 1, b > 1):
        case (True, True):
            return gmax([x.entry(a, b - 1), x.entry(a - 1, b)], sf)
        case (False, True):
            return x.entry(1, b - 1)
        case (True, False):
            return x.entry(a - 1, 1)
        case _:
            return sf.one


def gmin_at(x: MatrixGrid, a: int, b: int) -> Any:
    match (a < x.m, b < x.n):
        case (True, True):
            return x.entry(a + 1, b) + x.entry(a, b + 1)
        case (False, True):
            return x.entry(a, b + 1)
        case (True, False):
            return x.entry(a + 1, b)
        case _:
            raise ForbiddenToggle(f"T is not defined at the corner ({a}, {b})")


def _check_cell(x: MatrixGrid, a: int, b: int) -> None:
    if not (1 <= a <= x.m and 1 <= b <= x.n):
        raise InputError(f"cell ({a}, {b}) outside a {x.m}x{x.n} grid")


def local_move(x: MatrixGrid, kind: MoveKind, a: int, b: int) -> MatrixGrid:
    """eta_a^b multiplies x_a^b by gMax_a^b; T_a^b sends x_a^b to gMax_a^b gMin_a^b / x_a^b."""
    _check_cell(x, a, b)
    match kind:
        case "eta":
            return x.with_entry(a, b, x.entry(a, b) * gmax_at(x, a, b))
        case "T":
            return x.with_entry(a, b, gmax_at(x, a, b) * gmin_at(x, a, b) / x.entry(a, b))
        case _:
            raise InputError(f"unknown local move {kind!r}")


def eta_inverse(x: MatrixGrid, a: int, b: int) -> MatrixGrid:
    _check_cell(x, a, b)
    return x.with_entry(a, b, x.entry(a, b) / gmax_at(x, a, b))


def _toggles(a: int, b: int) -> Iterator[tuple[int, int]]:
    """The cells toggled by tau_a^b, nearest first: (a-1, b-1), (a-2, b-2), ..."""
    k = 1
    while a - k >= 1 and b - k >= 1:
        yield a - k, b - k
        k += 1


def tau(x: MatrixGrid, a: int, b: int) -> MatrixGrid:
    for cell in _toggles(a, b):
        x = local_move(x, "T", *cell)
    return x


def tau_inverse(x: MatrixGrid, a: int, b: int) -> MatrixGrid:
    for cell in reversed(list(_toggles(a, b))):
        x = local_move(x, "T", *cell)
    return x


def linear_extension(m: int, n: int, order: Order = "rows") -> list[tuple[int, int]]:
    match order:
        case "rows":
            return [(a, b) for a in range(1, m + 1) for b in range(1, n + 1)]
        case "columns":
            return [(a, b) for b in range(1, n + 1) for a in range(1, m + 1)]
        case _:
            raise InputError(f"unknown order {order!r}")


def grsk_local(x: MatrixGrid, order: Order = "rows") -> MatrixGrid:
    """rho = (all tau) after (all eta), each pass following the chosen linear extension."""
    cells = linear_extension(x.m, x.n, order)
    for a, b in cells:
        x = local_move(x, "eta", a, b)
    logger.debug("after eta pass: %s", x.entries)
    for a, b in cells:
        x = tau(x, a, b)
    return x


def grsk_inverse(y: MatrixGrid, order: Order = "rows") -> MatrixGrid:
    """Undo grsk_local: the tau pass in reverse, then eta^-1 in reverse."""
    cells = linear_extension(y.m, y.n, order)
    for a, b in reversed(cells):
        y = tau_inverse(y, a, b)
    for a, b in reversed(cells):
        y = eta_inverse(y, a, b)
    return y


###########
# Glue and split
###########


def glue(pq: PQPair) -> MatrixGrid:
    """P's z_{i,j} goes to (m-i+1, j-i+1) and Q's z'_{j',i'} to (i'-j'+1, n-j'+1)."""
    m, n = pq.Q.n, pq.P.n
    cells: dict[tuple[int, int], Any] = {}
    for (i, j), v in pq.P.entries.items():
        cells[(m - i + 1, j - i + 1)] = v
    for (j, i), v in pq.Q.entries.items():
        cells[(i - j + 1, n - j + 1)] = v
    if len(cells) != m * n:
        raise InputError("P and Q do not tile the grid")
    return MatrixGrid(tuple(tuple(cells[(r, c)] for c in range(1, n + 1)) for r in range(1, m + 1)))


def split(y: MatrixGrid) -> PQPair:
    m, n = y.m, y.n
    p = GTPattern.from_function(m, n, lambda i, j: y.entry(m - i + 1, j - i + 1))
    q = GTPattern.from_function(n, m, lambda j, i: y.entry(i - j + 1, n - j + 1))
    return PQPair(p, q)


###########
# Decoration and central charge
###########


def corner_term(pq: PQPair) -> Any:
    """z_{n,n} of P when m = n, else the additive zero."""
    m, n = pq.Q.n, pq.P.n
    return pq.P[(n, n)] if m == n else pq.P.semifield.zero


def decoration_split(x: MatrixGrid) -> tuple[Any, Any, Any, Any]:
    """(F(x), F(P), F(Q), corner). F(x) = F(P) + F(Q) + corner holds in both carriers."""
    pq = split(grsk_local(x))
    return decoration_matrix(x), gt_decoration(pq.P), gt_decoration(pq.Q), corner_term(pq)


def central_charge(x: MatrixGrid) -> Any:
    """Delta(x) = F(x) - F(P)."""
    pq = grsk_insert(x)
    return decoration_matrix(x) - gt_decoration(pq.P)


def central_charge_from_q(pq: PQPair) -> Any:
    """F(Q) + delta_{m,n} z_{n,n}; the carrier's addition is used, so this is min-plus over TropInt."""
    corner = corner_term(pq)
    f_q = gt_decoration(pq.Q)
    return f_q if pq.P.semifield.is_zero(corner) else f_q + corner


###########
# Noumi-Yamada bridge
###########


def _reciprocal(x: MatrixGrid) -> MatrixGrid:
    one = x.semifield.one
    return x.map(lambda v: one / v)


def noumi_yamada_grsk(x: MatrixGrid) -> MatrixGrid:
    """rho'(x) = 1 / rho(1 / x), entrywise."""
    return _reciprocal(grsk_local(_reciprocal(x)))


def noumi_yamada_pattern(x: MatrixGrid) -> GTPattern:
    """
    y_{i,j} = Delta_{[1,i],[j-i+1,j]}(H) / Delta_{[1,i-1],[j-i+2,j]}(H) with H = H(x_1) ... H(x_m).
    This is the P-part of noumi_yamada_grsk(x).
    """
    sf = x.semifield
    h = h_matrix(x.row(1), sf)
    for i in range(2, x.m + 1):
        h = h @ h_matrix(x.row(i), sf)
    entries = {}
    for i, j in gt_indices(x.m, x.n):
        den = minor(h, MinorIndex(interval(1, i - 1), interval(j - i + 2, j)))
        if sf.is_zero(den):
            raise VanishingMinor(f"H-minor for ({i}, {j}) vanishes")
        entries[(i, j)] = minor(h, MinorIndex(interval(1, i), interval(j - i + 1, j))) / den
    return GTPattern(x.m, x.n, entries)
