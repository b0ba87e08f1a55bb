"""
Loop symmetric functions as exact polynomials in the x_a^b: the loop elementary and
homogeneous functions, loop (skew) Schur functions by tableaux and by Jacobi-Trudi, the
shape invariants and box functions, and the reduction of an invariant polynomial to a
polynomial in the loop elementary functions through dominant monomials.
"""
from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from gcrystal.datatypes import EMonomial, ExponentMatrix, MinorIndex, ReductionResult
from gcrystal.errors import InputError, NotDominant
from gcrystal.matrices import SfMatrix, det_laplace, interval, loop_e_value, m_of, minor
from gcrystal.polynomials import POLYNOMIAL, LoopPoly, Monomial, lex_key, loop_var, symbolic_grid

logger = logging.getLogger(__name__)

Partition = tuple[int, ...]


def _color(r: int, n: int) -> int:
    return (r - 1) % n + 1


@lru_cache(maxsize=4096)
def loop_e(k: int, r: int, m: int, n: int) -> LoopPoly:
    """E_k^{(r)} = sum over i_1 < ... < i_k of x_{i_1}^{(r)} x_{i_2}^{(r+1)} ... x_{i_k}^{(r+k-1)}."""
    if k < 0 or k > m:
        return LoopPoly.zero()
    return loop_e_value(symbolic_grid(m, n), k, _color(r, n))


@lru_cache(maxsize=4096)
def loop_h(k: int, r: int, m: int, n: int) -> LoopPoly:
    """h_k^{(r)} = sum over i_1 <= ... <= i_k of x_{i_1}^{(r)} x_{i_2}^{(r-1)} ... x_{i_k}^{(r-k+1)}."""
    if k < 0:
        return LoopPoly.zero()
    dp = [LoopPoly.one()] + [LoopPoly.zero()] * k
    for a in range(1, m + 1):
        for t in range(1, k + 1):
            dp[t] = dp[t] + dp[t - 1] * loop_var(a, r - t + 1, n)
    return dp[k]


###########
# Loop Schur functions
###########


def _check_skew(lam: Partition, mu: Partition) -> Partition:
    if any(a < b for a, b in zip(lam, lam[1:])) or any(v < 0 for v in lam):
        raise InputError(f"{lam} is not a partition")
    mu = tuple(mu) + (0,) * (len(lam) - len(mu))
    if len(mu) > len(lam) or any(b > a for a, b in zip(lam, mu)):
        raise InputError(f"{mu} is not contained in {lam}")
    return mu


def conjugate(lam: Sequence[int]) -> Partition:
    return tuple(sum(1 for v in lam if v >= k) for k in range(1, (max(lam) if lam else 0) + 1))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Partitions with at most {rows} parts, each at most {cols}, without trailing zeros."""
    for parts in combinations_with_replacement(range(cols, -1, -1), rows):
        yield tuple(v for v in parts if v)


def skew_shapes_in_box(rows: int, cols: int) -> Iterator[tuple[Partition, Partition]]:
    """Every pair mu <= lam with lam inside the {rows} x {cols} box."""
    for lam in partitions_in_box(rows, cols):
        for mu in partitions_in_box(len(lam), lam[0] if lam else 0):
            if all(b <= a for a, b in zip(lam, mu)):
                yield lam, mu


def ssyt(lam: Partition, mu: Partition, bound: int) -> Iterator[dict[tuple[int, int], int]]:
    """Semistandard fillings of lam/mu with entries in [1, bound], keyed by (row, col)."""
    mu = _check_skew(lam, mu)
    cells = [(i, j) for i, row in enumerate(lam, start=1) for j in range(mu[i - 1] + 1, row + 1)]
    filling: dict[tuple[int, int], int] = {}

    def is_valid(cell: tuple[int, int], v: int) -> bool:
        i, j = cell
        left = filling.get((i, j - 1))
        above = filling.get((i - 1, j))
        return (left is None or left <= v) and (above is None or above < v)

    def backtrack(k: int) -> Iterator[dict[tuple[int, int], int]]:
        if k == len(cells):
            yield dict(filling)
            return
        cell = cells[k]
        for v in range(1, bound + 1):
            if is_valid(cell, v):
                filling[cell] = v
                yield from backtrack(k + 1)
                del filling[cell]

    yield from backtrack(0)


def loop_schur_tableaux(lam: Partition, mu: Partition, r: int, m: int, n: int) -> LoopPoly:
    """s_{lam/mu}^{(r)} = sum over T of the product of x_{T(s)}^{(c(s) + r)}, c(s) = row - col."""
    total = LoopPoly.zero()
    for filling in ssyt(tuple(lam), tuple(mu), m):
        term = LoopPoly.one()
        for (i, j), v in filling.items():
            term = term * loop_var(v, i - j + r, n)
        total = total + term
    return total


def jacobi_trudi_matrix(lam: Partition, mu: Partition, r: int, m: int, n: int) -> SfMatrix:
    """(E_{lam'_i - mu'_j + j - i}^{(r + mu'_j - j + 1)}) for i, j in [1, lam_1]."""
    mu = _check_skew(tuple(lam), tuple(mu))
    lam_c = conjugate(lam)
    size = len(lam_c)
    mu_c = conjugate(mu) + (0,) * size
    rows = []
    for i in range(1, size + 1):
        rows.append(
            tuple(
                loop_e(lam_c[i - 1] - mu_c[j - 1] + j - i, r + mu_c[j - 1] - j + 1, m, n) for j in range(1, size + 1)
            )
        )
    return SfMatrix(tuple(rows), POLYNOMIAL)


def loop_schur_jt(lam: Partition, mu: Partition, r: int, m: int, n: int) -> LoopPoly:
    mat = jacobi_trudi_matrix(lam, mu, r, m, n)
    if mat.rows == 0:
        return LoopPoly.one()
    result: LoopPoly = det_laplace(mat)
    return result


def shape_invariant(k: int, m: int, n: int) -> LoopPoly:
    """S_k = Delta_{[k,n],[1,n-k+1]}(M(x)) over the polynomial ring."""
    if not 1 <= k <= min(m, n):
        raise InputError(f"S_k needs 1 <= k <= {min(m, n)}, got {k}")
    result: LoopPoly = minor(m_of(symbolic_grid(m, n)), MinorIndex(interval(k, n), interval(1, n - k + 1)))
    return result


@lru_cache(maxsize=1024)
def box(i: int, j: int, m: int, n: int) -> LoopPoly:
    """The loop Schur function of the (j - i + 1)^{m - i + 1} rectangle at color j; one past the pattern."""
    if i > j or i > m:
        return LoopPoly.one()
    return loop_schur_jt((j - i + 1,) * (m - i + 1), (), j, m, n)


###########
# Dominant monomials and reduction
###########


def exponent_matrix(mono: Monomial, m: int, n: int) -> ExponentMatrix:
    grid = [[0] * n for _ in range(m)]
    for (a, b), e in mono:
        if a > m or b > n:
            raise InputError(f"variable x_{a}^{b} outside an {m}x{n} grid")
        grid[a - 1][b - 1] = e
    return ExponentMatrix(tuple(tuple(row) for row in grid))


def dominance(p: ExponentMatrix) -> bool:
    """Every column weakly decreasing."""
    return all(all(u >= v for u, v in zip(col, col[1:])) for col in (p.column(b) for b in range(1, p.n + 1)))


def e_p(p: ExponentMatrix) -> EMonomial:
    """E_p = prod_j prod_k E_{lambda_k^{(j)}}^{(j)} with lambda^{(j)} conjugate to column j."""
    if not dominance(p):
        raise NotDominant(f"{p.entries} has an increasing column")
    return EMonomial.from_factors((k, b) for b in range(1, p.n + 1) for k in conjugate(p.column(b)))


def expand_e_monomial(em: EMonomial, m: int, n: int) -> LoopPoly:
    out = LoopPoly.one()
    for k, r, e in em.factors:
        out = out * loop_e(k, r, m, n) ** e
    return out


def leading_monomial(f: LoopPoly) -> Monomial | None:
    return f.leading_monomial()


def leading_dominant(f: LoopPoly, m: int, n: int) -> tuple[Monomial, Fraction] | None:
    dominant = [mono for mono, _ in f.monomials() if dominance(exponent_matrix(mono, m, n))]
    if not dominant:
        return None
    mono = max(dominant, key=lex_key)
    return mono, f.coefficient(mono)


def lsym_reduce(f: LoopPoly, m: int, n: int) -> ReductionResult:
    """
    Peel off c E_p for the lex-largest dominant monomial c x^p until nothing dominant is left.
    A zero remainder means f was written as a polynomial in the loop elementary functions.
    """
    terms: list[tuple[Fraction, EMonomial]] = []
    while (found := leading_dominant(f, m, n)) is not None:
        mono, c = found
        em = e_p(exponent_matrix(mono, m, n))
        f = f - expand_e_monomial(em, m, n) * c
        terms.append((c, em))
        logger.debug("subtracted %s * %s", c, em)
    if not f.is_zero():
        logger.debug("reduction left a remainder with %s terms", len(f.terms))
    return ReductionResult(tuple(terms), f)
