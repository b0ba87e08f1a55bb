"""
Matrices over a semifield: whirls, the whirl product M(x), minors, the planar-network
path sums of GT patterns, and the H / dagger machinery.

Everything here except the determinant routines is subtraction-free and runs over any
carrier registered with `semifield_of`.
"""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from gcrystal.datatypes import GTPattern, MatrixGrid, MinorIndex
from gcrystal.errors import CapabilityError, InputError, SingularMatrix
from gcrystal.semifield import Semifield, semifield_of

logger = logging.getLogger(__name__)

LAPLACE_MAX = 4


@dataclass(frozen=True, slots=True)
class SfMatrix:
    """A rectangular matrix of semifield values. {semifield} supplies one and the structural zero."""

    entries: tuple[tuple[Any, ...], ...]
    semifield: Semifield

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        if any(len(row) != len(rows[0]) for row in rows):
            raise InputError("matrix rows have different lengths")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i: int, j: int) -> Any:
        return self.entries[i - 1][j - 1]

    def transpose(self) -> SfMatrix:
        return SfMatrix(tuple(zip(*self.entries)), self.semifield)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> SfMatrix:
        return SfMatrix(tuple(tuple(self.entries[i - 1][j - 1] for j in cols) for i in rows), self.semifield)

    def map(self, f: Callable[[Any], Any], semifield: Semifield | None = None) -> SfMatrix:
        return SfMatrix(tuple(tuple(f(v) for v in row) for row in self.entries), semifield or self.semifield)

    def __matmul__(self, other: SfMatrix) -> SfMatrix:
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        sf = self.semifield
        columns = list(zip(*other.entries))
        return SfMatrix(
            tuple(
                tuple(
                    sf.sum(a * b for a, b in zip(row, col) if not (sf.is_zero(a) or sf.is_zero(b))) for col in columns
                )
                for row in self.entries
            ),
            sf,
        )

    def to_list(self) -> list[list[Any]]:
        return [list(row) for row in self.entries]


def identity(n: int, sf: Semifield) -> SfMatrix:
    return SfMatrix(tuple(tuple(sf.one if i == j else sf.zero for j in range(n)) for i in range(n)), sf)


def from_grid(x: MatrixGrid) -> SfMatrix:
    return SfMatrix(x.entries, x.semifield)


def whirl(x: Sequence[Any], sf: Semifield | None = None) -> SfMatrix:
    """W(x): x on the diagonal and ones directly beneath it."""
    if not x:
        raise InputError("a whirl needs at least one entry")
    sf = sf or semifield_of(x[0])
    n = len(x)
    return SfMatrix(
        tuple(
            tuple(x[i] if i == j else sf.one if i == j + 1 else sf.zero for j in range(n)) for i in range(n)
        ),
        sf,
    )


def times_whirl(a: SfMatrix, x: Sequence[Any]) -> SfMatrix:
    """A * W(x) without materializing W: column j becomes A^j x_j + A^{j+1}."""
    sf = a.semifield
    n = len(x)
    out = []
    for row in a.entries:
        out.append(tuple(row[j] * x[j] + row[j + 1] if j + 1 < n else row[j] * x[j] for j in range(n)))
    return SfMatrix(tuple(out), sf)


def m_of(x: MatrixGrid) -> SfMatrix:
    """
    M(x) = W(x_1) ... W(x_m), the product of the row whirls. This is an n x n matrix in
    (B^-)^{<=m}: entry (i, j) is the loop elementary function e^{(i)}_{m+j-i}.
    """
    sf = x.semifield
    acc = whirl(x.row(1), sf)
    for i in range(2, x.m + 1):
        acc = times_whirl(acc, x.row(i))
    return acc


def prefix_products(x: MatrixGrid) -> list[SfMatrix]:
    """[M(x_1), M(x_1, x_2), ..., M(x)], each built from the previous one."""
    sf = x.semifield
    out = [whirl(x.row(1), sf)]
    for i in range(2, x.m + 1):
        out.append(times_whirl(out[-1], x.row(i)))
    return out


###########
# Determinants
###########


def _require_subtraction(sf: Semifield, what: str) -> None:
    if not sf.has_subtraction:
        raise CapabilityError(f"{what} needs subtraction, which the {sf.name} carrier lacks")


def det_laplace(a: SfMatrix) -> Any:
    """Cofactor expansion along the first row. Division-free, so it also works over polynomials."""
    sf = a.semifield
    _require_subtraction(sf, "a determinant")
    if a.rows != a.cols:
        raise InputError(f"determinant of a non-square {a.rows}x{a.cols} matrix")
    return _laplace(a.entries, sf)


def _laplace(rows: tuple[tuple[Any, ...], ...], sf: Semifield) -> Any:
    size = len(rows)
    if size == 0:
        return sf.one
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = sf.zero
    for j, a in enumerate(rows[0]):
        if sf.is_zero(a):
            continue
        minor = _laplace(tuple(row[:j] + row[j + 1 :] for row in rows[1:]), sf)
        total = total + a * minor if j % 2 == 0 else total - a * minor
    return total


def det_elimination(a: SfMatrix) -> Any:
    """Gaussian elimination with exact division; needs a field."""
    sf = a.semifield
    _require_subtraction(sf, "a determinant")
    if not sf.has_division:
        raise CapabilityError(f"elimination needs division, which the {sf.name} carrier lacks")
    if a.rows != a.cols:
        raise InputError(f"determinant of a non-square {a.rows}x{a.cols} matrix")
    rows = [list(row) for row in a.entries]
    size = len(rows)
    det = sf.one
    for k in range(size):
        pivot = next((r for r in range(k, size) if not sf.is_zero(rows[r][k])), None)
        if pivot is None:
            return sf.zero
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            det = -det
        det = det * rows[k][k]
        for r in range(k + 1, size):
            if sf.is_zero(rows[r][k]):
                continue
            factor = rows[r][k] / rows[k][k]
            rows[r] = [u - factor * v for u, v in zip(rows[r], rows[k])]
    return det


def determinant(a: SfMatrix) -> Any:
    if a.rows <= LAPLACE_MAX or not a.semifield.has_division:
        return det_laplace(a)
    return det_elimination(a)


def minor(a: SfMatrix, idx: MinorIndex) -> Any:
    """Delta_{I,J}(A), with Delta_empty = 1. Raises CapabilityError in tropical mode."""
    _require_subtraction(a.semifield, "a minor")
    if idx.rows and (idx.rows[-1] > a.rows or idx.cols[-1] > a.cols):
        raise InputError(f"minor {idx} out of range for a {a.rows}x{a.cols} matrix")
    return determinant(a.submatrix(idx.rows, idx.cols))


def flag_minor(a: SfMatrix, rows: Iterable[int]) -> Any:
    return minor(a, MinorIndex.flag(rows))


def interval(i: int, j: int) -> tuple[int, ...]:
    """The integer interval [i, j], empty when i > j."""
    return tuple(range(i, j + 1))


###########
# GT factors and the planar network
###########


def wi_matrix(i: int, z: Sequence[Any], sf: Semifield | None = None) -> SfMatrix:
    """
    W^i(z_i, ..., z_n): ones on the diagonal above position i, z_k at (k, k) for k >= i,
    and ones at (k + 1, k) for i <= k < n.
    """
    if i < 1:
        raise InputError(f"W^i needs i >= 1, got {i}")
    sf = sf or semifield_of(z[0])
    n = i - 1 + len(z)
    rows = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n + 1):
            if r == c:
                row.append(z[r - i] if r >= i else sf.one)
            elif r == c + 1 and c >= i:
                row.append(sf.one)
            else:
                row.append(sf.zero)
        rows.append(tuple(row))
    return SfMatrix(tuple(rows), sf)


def phi_factors(z: GTPattern) -> list[SfMatrix]:
    """The factors W^p(...), ..., W^1(...) of Phi(z), leftmost first."""
    sf = z.semifield
    factors = []
    for i in range(z.p, 0, -1):
        args = [z[(i, i)]] + [z[(i, j)] / z[(i, j - 1)] for j in range(i + 1, z.n + 1)]
        factors.append(wi_matrix(i, args, sf))
    return factors


def chevalley(n: int, i: int, a: Any, sf: Semifield) -> SfMatrix:
    """x_i(a) = I + a E_{i,i+1}."""
    if not 1 <= i < n:
        raise InputError(f"x_i(a) needs 1 <= i < {n}, got {i}")
    base = identity(n, sf).to_list()
    base[i - 1][i] = a
    return SfMatrix(tuple(tuple(row) for row in base), sf)


def lgv_minor(layers: Sequence[SfMatrix], rows: Sequence[int], cols: Sequence[int]) -> Any:
    """
    Sum over vertex-disjoint path families through a stack of lower bidiagonal layers,
    from sources {rows} to sinks {cols}. Each layer lets a path stay at level k with the
    diagonal weight or drop from k + 1 to k with the subdiagonal weight. Disjoint families
    in such a network can only realize the identity matching, so the sum equals
    Delta_{rows,cols} of the layer product without any subtraction.
    """
    sf = layers[0].semifield
    states: dict[tuple[int, ...], Any] = {tuple(rows): sf.one}
    for layer in layers:
        nxt: dict[tuple[int, ...], Any] = {}
        for state, weight in states.items():
            for moved, w in _layer_moves(layer, state, sf):
                nxt[moved] = nxt[moved] + weight * w if moved in nxt else weight * w
        states = nxt
    return states.get(tuple(cols), sf.zero)


def _layer_moves(layer: SfMatrix, state: tuple[int, ...], sf: Semifield) -> list[tuple[tuple[int, ...], Any]]:
    partial: list[tuple[tuple[int, ...], Any]] = [((), sf.one)]
    for k in state:
        grown = []
        for prefix, w in partial:
            for target in (k, k - 1):
                if target < 1 or (prefix and prefix[-1] >= target):
                    continue
                edge = layer.entry(k, target)
                if sf.is_zero(edge):
                    continue
                grown.append((prefix + (target,), w * edge))
        partial = grown
    return partial


def lgv_flag_minor(z: GTPattern, rows: Iterable[int]) -> Any:
    """Delta_I(Phi(z)) as a subtraction-free path sum over the network of the W^i factors."""
    rows = tuple(rows)
    if any(r < 1 or r > z.n for r in rows):
        raise InputError(f"sources {rows} out of range for n={z.n}")
    if not rows:
        return z.semifield.one
    return lgv_minor(phi_factors(z), rows, interval(1, len(rows)))


###########
# H matrices, inverse and dagger
###########


def h_matrix(a: Sequence[Any], sf: Semifield | None = None) -> SfMatrix:
    """H(a^1, ..., a^n): entry (i, j) is a^i a^{i+1} ... a^j for i <= j."""
    sf = sf or semifield_of(a[0])
    n = len(a)
    rows = []
    for i in range(n):
        row = [sf.zero] * n
        acc = sf.one
        for j in range(i, n):
            acc = acc * a[j]
            row[j] = acc
        rows.append(tuple(row))
    return SfMatrix(tuple(rows), sf)


def inverse(a: SfMatrix) -> SfMatrix:
    sf = a.semifield
    _require_subtraction(sf, "inversion")
    if a.rows != a.cols:
        raise InputError("only square matrices are invertible")
    n = a.rows
    work = [list(row) + [sf.one if i == j else sf.zero for j in range(n)] for i, row in enumerate(a.entries)]
    for k in range(n):
        pivot = next((r for r in range(k, n) if not sf.is_zero(work[r][k])), None)
        if pivot is None:
            raise SingularMatrix(f"{n}x{n} matrix is singular")
        work[k], work[pivot] = work[pivot], work[k]
        p = work[k][k]
        work[k] = [v / p for v in work[k]]
        for r in range(n):
            if r != k and not sf.is_zero(work[r][k]):
                factor = work[r][k]
                work[r] = [u - factor * v for u, v in zip(work[r], work[k])]
    return SfMatrix(tuple(tuple(row[n:]) for row in work), sf)


def dagger(a: SfMatrix) -> SfMatrix:
    """A^dagger: the transposed inverse with row and column i scaled by (-1)^(i-1)."""
    inv_t = inverse(a).transpose()
    return SfMatrix(
        tuple(tuple(v if (i + j) % 2 == 0 else -v for j, v in enumerate(row)) for i, row in enumerate(inv_t.entries)),
        a.semifield,
    )


###########
# Loop elementary values and the periodic whirl product
###########


def loop_entry(x: MatrixGrid, a: int, color: int) -> Any:
    """x_a^{(color)} = x_a^{((color - a) mod n) + 1}."""
    return x.entry(a, (color - a) % x.n + 1)


def loop_e_value(x: MatrixGrid, k: int, r: int) -> Any:
    """E_k^{(r)} evaluated at x: sum over i_1 < ... < i_k of x_{i_1}^{(r)} ... x_{i_k}^{(r+k-1)}."""
    sf = x.semifield
    if k < 0 or k > x.m:
        return sf.zero
    dp = [sf.one] + [sf.zero] * k
    for a in range(1, x.m + 1):
        for t in range(min(a, k), 0, -1):
            term = dp[t - 1] * loop_entry(x, a, r + t - 1)
            dp[t] = dp[t] + term
    return dp[k]


def periodic_window(x: MatrixGrid, rows: Iterable[int], cols: Iterable[int]) -> SfMatrix:
    """
    The window rows x cols of the n-periodic product of whirls. Entry (i, j) is
    e^{(i)}_{m+j-i}, which vanishes unless 0 <= i - j <= m.
    """
    sf = x.semifield
    cols = list(cols)
    out = []
    for i in rows:
        out.append(tuple(loop_e_value(x, x.m + j - i, i) if 0 <= i - j <= x.m else sf.zero for j in cols))
    return SfMatrix(tuple(out), sf)
