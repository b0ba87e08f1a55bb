"""
The combinatorial shadow of the geometric constructions.

Tropical results come from re-running the generic code over TropInt. The independent
oracles here (Schensted insertion, the signature rule on tensor products of one-column or
one-row crystals) never touch that code, so agreement between the two is a real check.
"""
from __future__ import annotations

import logging
from bisect import bisect_right
from collections import Counter, defaultdict
from collections.abc import Iterator, Sequence
from itertools import product
from typing import Literal

from gcrystal.crystal_basic import Axis, e_op
from gcrystal.crystal_gt import gt_decoration, gt_e_explicit, gt_interlaces
from gcrystal.datatypes import GTPattern, MatrixGrid, PQPair, Tableau, gt_indices
from gcrystal.errors import InputError, NotSemistandard
from gcrystal.grsk import glue, grsk_local, split
from gcrystal.semifield import TropInt

logger = logging.getLogger(__name__)

Direction = Literal["raise", "lower"]
IntMatrix = Sequence[Sequence[int]]


def trop_grid(a: IntMatrix) -> MatrixGrid:
    return MatrixGrid(tuple(tuple(TropInt(int(v)) for v in row) for row in a))


def int_rows(x: MatrixGrid) -> list[list[int]]:
    return [[int(v) for v in row] for row in x.entries]


def _check_nonnegative(a: IntMatrix) -> None:
    if any(v < 0 for row in a for v in row):
        raise InputError("integer matrices must have nonnegative entries")


###########
# Classical RSK
###########


def row_insert(rows: list[list[int]], value: int) -> int:
    """Schensted row insertion; returns the index of the row that grew."""
    for r, row in enumerate(rows):
        pos = bisect_right(row, value)
        if pos == len(row):
            row.append(value)
            return r
        row[pos], value = value, row[pos]
    rows.append([value])
    return len(rows) - 1


def schensted_rsk(a: IntMatrix) -> tuple[Tableau, Tableau]:
    """RSK on the two-line array of {a}: column indices are inserted, row indices recorded."""
    _check_nonnegative(a)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, row in enumerate(a, start=1):
        for j, count in enumerate(row, start=1):
            for _ in range(count):
                r = row_insert(p_rows, j)
                if r == len(q_rows):
                    q_rows.append([])
                q_rows[r].append(i)
    return Tableau(tuple(map(tuple, p_rows))), Tableau(tuple(map(tuple, q_rows)))


def tableau_to_gt(t: Tableau, n: int, m: int) -> GTPattern:
    """
    The pattern in GT_n^{<=m} with a_{i,j} = number of entries <= j in row i. Needs a
    semistandard tableau with entries <= n and at most m rows.
    """
    if not t.is_semistandard():
        raise NotSemistandard(f"{t} is not semistandard")
    if len(t.rows) > min(m, n) or any(v > n for row in t.rows for v in row):
        raise NotSemistandard(f"{t} does not fit entries <= {n} in at most {min(m, n)} rows")
    rows = t.rows + ((),) * m
    return GTPattern.from_function(m, n, lambda i, j: TropInt(bisect_right(rows[i - 1], j)))


def gt_to_tableau(a: GTPattern) -> Tableau:
    """Row i holds a_{i,j} - a_{i,j-1} copies of j, with a_{i,i-1} = 0."""
    if not gt_interlaces(a) or any(int(v) < 0 for v in a.entries.values()):
        raise NotSemistandard("pattern does not interlace")
    rows = []
    for i in range(1, a.p + 1):
        row: list[int] = []
        prev = 0
        for j in range(i, a.n + 1):
            cur = int(a[(i, j)])
            row.extend([j] * (cur - prev))
            prev = cur
        rows.append(tuple(row))
    return Tableau(tuple(rows))


def trop_grsk(a: IntMatrix) -> MatrixGrid:
    """Tropical gRSK: the local moves run over (min, +)."""
    _check_nonnegative(a)
    return grsk_local(trop_grid(a))


def trop_grsk_oracle(a: IntMatrix) -> MatrixGrid:
    """glue(tableau_to_gt(P), tableau_to_gt(Q)) for the Schensted pair of {a}."""
    m, n = len(a), len(a[0])
    p, q = schensted_rsk(a)
    return glue(PQPair(tableau_to_gt(p, n, m), tableau_to_gt(q, m, n)))


###########
# Crystal operators
###########


def _c_for(direction: Direction) -> TropInt:
    match direction:
        case "raise":
            return TropInt(1)
        case "lower":
            return TropInt(-1)
        case _:
            raise InputError(f"unknown direction {direction!r}")


def trop_crystal_e(a: IntMatrix, i: int, direction: Direction, axis: Axis = "rows") -> list[list[int]] | None:
    """
    The tropical e_i at c = 1 (raise) or c = -1 (lower). None when the result leaves the
    region where the tropical decoration is nonnegative, i.e. when an entry goes negative.
    """
    _check_nonnegative(a)
    out = int_rows(e_op(trop_grid(a), i, _c_for(direction), axis))
    if any(v < 0 for row in out for v in row):
        return None
    return out


def _tensor_maps(factors: Sequence[Sequence[int]], i: int) -> tuple[int, int]:
    """(eps, phi) of a tensor product of one-column crystals, folded from the right."""
    eps, phi = factors[-1][i], factors[-1][i - 1]
    for col in reversed(factors[:-1]):
        ex, px = col[i], col[i - 1]
        cut = min(ex, phi)
        eps, phi = ex + eps - cut, px + phi - cut
    return eps, phi


def _tensor_apply(factors: list[list[int]], i: int, direction: Direction) -> bool:
    """Apply the signature rule in place. Returns False when the operator is undefined."""
    for k in range(len(factors) - 1):
        head = factors[k]
        _, phi_rest = _tensor_maps(factors[k + 1 :], i)
        eps_head = head[i]
        on_head = phi_rest < eps_head if direction == "raise" else phi_rest <= eps_head
        if on_head:
            return _column_apply(head, i, direction)
    return _column_apply(factors[-1], i, direction)


def _column_apply(col: list[int], i: int, direction: Direction) -> bool:
    src, dst = (i, i - 1) if direction == "raise" else (i - 1, i)
    if col[src] == 0:
        return False
    col[src] -= 1
    col[dst] += 1
    return True


def comb_crystal_oracle(a: IntMatrix, i: int, direction: Direction, axis: Axis = "rows") -> list[list[int]] | None:
    """
    The same operator by the tensor-product rule on x^1 (x) ... (x) x^n, each column a
    one-column crystal with eps_i = a_{i+1} and phi_i = a_i. e acts on the first factor when
    phi(rest) < eps(first), f when phi(rest) <= eps(first).
    """
    _check_nonnegative(a)
    _c_for(direction)
    rows = [list(row) for row in a]
    if axis == "columns":
        rows = [list(col) for col in zip(*rows)]
    elif axis != "rows":
        raise InputError(f"unknown axis {axis!r}")
    if not 1 <= i < len(rows):
        raise InputError(f"crystal index {i} out of range")
    columns = [list(col) for col in zip(*rows)]
    if not _tensor_apply(columns, i, direction):
        return None
    out = [list(row) for row in zip(*columns)]
    return [list(col) for col in zip(*out)] if axis == "columns" else out


def tableau_crystal_e(t: Tableau, j: int, direction: Direction, height: int) -> Tableau | None:
    """
    The tableau crystal on T = r_k (x) ... (x) r_1 (bottom row first), each row a one-row
    crystal with eps_j = #(j + 1) and phi_j = #j. Raising turns a j + 1 into j.
    """
    if not 1 <= j < height:
        raise InputError(f"crystal index {j} out of range [1, {height - 1}]")
    _c_for(direction)
    counts = [[row.count(v) for v in range(1, height + 1)] for row in reversed(t.rows)]
    if not counts:
        return None
    if not _tensor_apply(counts, j, direction):
        return None
    rows = [tuple(v for v in range(1, height + 1) for _ in range(c[v - 1])) for c in reversed(counts)]
    return Tableau(tuple(rows))


def trop_gt_e(a: GTPattern, j: int, direction: Direction) -> GTPattern | None:
    """The explicit GT operator over TropInt, cut to interlacing patterns."""
    out = gt_e_explicit(a, j, _c_for(direction))
    return out if gt_interlaces(out) else None


###########
# Central charge
###########


def trop_central_charge(a: IntMatrix) -> int:
    """Trop F(Q) min z_{n,n} (the corner only when m = n), over (min, +)."""
    return pattern_charge(split(trop_grsk(a)).Q)


def recording_patterns(content: Sequence[int], n: int) -> Iterator[GTPattern]:
    """
    Integer patterns in GT_m^{<=n}, m = len(content), that interlace, are nonnegative and
    have row sums content_1 + ... + content_j.
    """
    m = len(content)
    if m < 1 or any(c < 0 for c in content):
        raise InputError(f"content must be a nonempty list of nonnegative integers, got {content}")
    targets = [sum(content[:j]) for j in range(1, m + 1)]

    def rows_from(prev: tuple[int, ...], j: int) -> Iterator[tuple[int, ...]]:
        bounds = []
        for i in range(1, min(j, n) + 1):
            lo = prev[i - 1] if i <= len(prev) else 0
            hi = prev[i - 2] if i >= 2 else targets[j - 1]
            bounds.append(range(lo, hi + 1))
        for row in product(*bounds):
            if sum(row) == targets[j - 1]:
                yield row

    def extend(j: int, prev: tuple[int, ...], acc: dict[tuple[int, int], int]) -> Iterator[GTPattern]:
        if j > m:
            yield GTPattern(n, m, {k: TropInt(v) for k, v in acc.items()})
            return
        for row in rows_from(prev, j):
            nxt = dict(acc)
            nxt.update({(i, j): v for i, v in enumerate(row, start=1)})
            yield from extend(j + 1, row, nxt)

    yield from extend(1, (), {})


def pattern_charge(q: GTPattern) -> int:
    """
    Charge of a recording pattern in GT_m^{<=n}: Trop F(Q), min'd with the shape corner when
    m = n. A decoration with no terms counts as charge 0.
    """
    sf = q.semifield
    f_q = gt_decoration(q)
    if q.m == q.n:
        f_q = f_q + q[(q.n, q.n)]
    return 0 if sf.is_zero(f_q) else int(f_q)


def q_analogue(content: Sequence[int], n: int) -> list[tuple[tuple[int, ...], dict[int, int]]]:
    """Charges of all recording patterns of the given content, grouped by shape (largest shape first)."""
    table: dict[tuple[int, ...], Counter[int]] = defaultdict(Counter)
    for q in recording_patterns(content, n):
        table[tuple(int(v) for v in q.shape())][pattern_charge(q)] += 1
    logger.debug("q-analogue for content %s, n=%s: %s shapes", content, n, len(table))
    return [(shape, dict(sorted(table[shape].items()))) for shape in sorted(table, reverse=True)]


def matrices_with_row_sums(row_sums: Sequence[int], n: int) -> Iterator[list[list[int]]]:
    """All nonnegative integer matrices with n columns and the given row sums."""

    def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for rows in product(*(list(compositions(s, n)) for s in row_sums)):
        yield [list(r) for r in rows]


def recording_charges_from_matrices(row_sums: Sequence[int], n: int) -> dict[tuple[int, ...], int]:
    """{Q entries: charge} collected by running tropical gRSK over every matrix with these row sums."""
    out: dict[tuple[int, ...], int] = {}
    for a in matrices_with_row_sums(row_sums, n):
        q = split(trop_grsk(a)).Q
        key = tuple(int(q[k]) for k in gt_indices(q.m, q.n))
        out[key] = trop_central_charge(a)
    return out
