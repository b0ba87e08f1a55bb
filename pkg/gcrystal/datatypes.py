"""Data types shared across gcrystal. Indices follow the 1-based matrix convention throughout."""
from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from gcrystal.errors import InputError
from gcrystal.semifield import ABSENT, Semifield, semifield_of


@dataclass(frozen=True, slots=True)
class MatrixGrid:
    """
    A point x = (x_i^j) of Mat_{m x n}. Row x_i is entries[i - 1]; column x^j is the
    (j - 1)th coordinate of every row. Entries are nonzero scalars of a single carrier.
    """

    entries: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        if not rows or not rows[0]:
            raise InputError("a grid needs at least one row and one column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise InputError("grid rows have different lengths")
        if any(v is ABSENT or semifield_of(v).is_zero(v) for row in rows for v in row):
            raise InputError("grid entries must be nonzero")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> MatrixGrid:
        return cls(tuple(tuple(row) for row in rows))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def semifield(self) -> Semifield:
        return semifield_of(self.entries[0][0])

    def entry(self, i: int, j: int) -> Any:
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[Any, ...]:
        return self.entries[i - 1]

    def col(self, j: int) -> tuple[Any, ...]:
        return tuple(row[j - 1] for row in self.entries)

    def transpose(self) -> MatrixGrid:
        return MatrixGrid(tuple(zip(*self.entries)))

    def with_rows(self, updates: Mapping[int, Sequence[Any]]) -> MatrixGrid:
        """Replace the rows keyed (1-based) in {updates}."""
        return MatrixGrid(
            tuple(tuple(updates[i]) if i in updates else row for i, row in enumerate(self.entries, start=1))
        )

    def with_entry(self, i: int, j: int, value: Any) -> MatrixGrid:
        row = list(self.entries[i - 1])
        row[j - 1] = value
        return self.with_rows({i: row})

    def map(self, f: Callable[[Any], Any]) -> MatrixGrid:
        return MatrixGrid(tuple(tuple(f(v) for v in row) for row in self.entries))

    def values(self) -> Iterator[Any]:
        for row in self.entries:
            yield from row

    def to_list(self) -> list[list[Any]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True, slots=True)
class CrystalData:
    """The structure maps gamma, eps_i, phi_i of a geometric crystal at one point and index."""

    gamma: tuple[Any, ...]
    eps: Any
    phi: Any

    def to_list(self) -> list[Any]:
        return [list(self.gamma), self.eps, self.phi]


def gt_indices(m: int, n: int) -> list[tuple[int, int]]:
    """
    Index set of GT_n^{<=m}: (i, j) with 1 <= i <= m and i <= j <= n, listed row by
    row of the triangle (j ascending, then i ascending).
    """
    return [(i, j) for j in range(1, n + 1) for i in range(1, min(j, m) + 1)]


@dataclass(frozen=True, slots=True)
class GTPattern:
    """
    A point z = (z_{i,j}) of GT_n^{<=m}. {n} is the height of the triangle and {m} bounds
    the number of diagonals, so p = min(m, n) diagonals are present. The "row" j of the
    triangle holds z_{1,j}, ..., z_{min(j, m),j}; the shape is the last row.
    """

    m: int
    n: int
    entries: Mapping[tuple[int, int], Any] = field(compare=True)

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InputError(f"GT pattern bounds must be positive, got m={self.m}, n={self.n}")
        entries = dict(self.entries)
        expected = set(gt_indices(self.m, self.n))
        if set(entries) != expected:
            missing = sorted(expected - set(entries))
            extra = sorted(set(entries) - expected)
            raise InputError(f"GT pattern index mismatch: missing {missing}, unexpected {extra}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_function(cls, m: int, n: int, f: Callable[[int, int], Any]) -> GTPattern:
        return cls(m, n, {(i, j): f(i, j) for i, j in gt_indices(m, n)})

    @property
    def p(self) -> int:
        return min(self.m, self.n)

    def __getitem__(self, key: tuple[int, int]) -> Any:
        return self.entries[key]

    def get(self, i: int, j: int, default: Any = None) -> Any:
        return self.entries.get((i, j), default)

    def shape(self) -> tuple[Any, ...]:
        return tuple(self.entries[(i, self.n)] for i in range(1, self.p + 1))

    def row(self, j: int) -> tuple[Any, ...]:
        return tuple(self.entries[(i, j)] for i in range(1, min(j, self.m) + 1))

    def with_entries(self, updates: Mapping[tuple[int, int], Any]) -> GTPattern:
        return GTPattern(self.m, self.n, {**self.entries, **updates})

    def map(self, f: Callable[[Any], Any]) -> GTPattern:
        return GTPattern(self.m, self.n, {k: f(v) for k, v in self.entries.items()})

    @property
    def semifield(self) -> Semifield:
        return semifield_of(self.entries[(1, 1)])


@dataclass(frozen=True, slots=True)
class PQPair:
    """
    The output of geometric RSK on an m x n grid: P in GT_n^{<=m} and Q in GT_m^{<=n}.
    Q's entry z'_{j',i'} is stored under key (j', i').
    """

    P: GTPattern
    Q: GTPattern

    def __post_init__(self) -> None:
        if self.P.shape() != self.Q.shape():
            raise InputError(f"P and Q shapes differ: {self.P.shape()} != {self.Q.shape()}")

    @property
    def shape(self) -> tuple[Any, ...]:
        return self.P.shape()


@dataclass(frozen=True, slots=True)
class Tableau:
    """A (possibly empty) tableau stored row by row, top row first."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = [tuple(row) for row in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        object.__setattr__(self, "rows", tuple(rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def size(self) -> int:
        return sum(self.shape)

    def content(self, bound: int) -> tuple[int, ...]:
        counts = Counter(v for row in self.rows for v in row)
        return tuple(counts[k] for k in range(1, bound + 1))

    def is_semistandard(self) -> bool:
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            return False
        for row in self.rows:
            if any(v < 1 for v in row) or any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "/".join("".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True, slots=True)
class MinorIndex:
    """Row set I and column set J of a minor, both strictly increasing and 1-based."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(rows) != len(cols):
            raise InputError(f"minor needs |I| = |J|, got {rows} and {cols}")
        for s in (rows, cols):
            if any(a >= b for a, b in zip(s, s[1:])) or any(v < 1 for v in s):
                raise InputError(f"minor index set {s} must be strictly increasing and positive")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def flag(cls, rows: Iterable[int]) -> MinorIndex:
        """Delta_I: rows I against the initial column segment [1, |I|]."""
        rows = tuple(rows)
        return cls(rows, tuple(range(1, len(rows) + 1)))


@dataclass(frozen=True, slots=True)
class ExponentMatrix:
    """
    Exponents of a monomial arranged m x n, the entry at (a, b) being the exponent of
    x_a^b (loop color a + b - 1).
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, b: int) -> tuple[int, ...]:
        return tuple(row[b - 1] for row in self.entries)


@dataclass(frozen=True, slots=True)
class EMonomial:
    """
    A monomial in the loop elementary functions: {factors} holds (k, r, multiplicity)
    for each E_k^{(r)}, sorted by color then by descending degree.
    """

    factors: tuple[tuple[int, int, int], ...] = ()

    @classmethod
    def from_factors(cls, pairs: Iterable[tuple[int, int]]) -> EMonomial:
        counts = Counter((k, r) for k, r in pairs if k > 0)
        return cls(tuple((k, r, e) for (k, r), e in sorted(counts.items(), key=lambda kv: (kv[0][1], -kv[0][0]))))

    def degree(self) -> int:
        return sum(k * e for k, _, e in self.factors)

    def to_list(self) -> list[list[int]]:
        return [list(f) for f in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = [f"E_{k}^({r})" + (f"^{e}" if e > 1 else "") for k, r, e in self.factors]
        return " ".join(parts)


@dataclass(frozen=True, slots=True)
class ReductionResult:
    """
    Outcome of reducing a polynomial by loop elementary monomials. {terms} records each
    subtracted c * E_p; {remainder} is zero exactly when the reduction succeeded.
    """

    terms: tuple[tuple[Fraction, EMonomial], ...]
    remainder: Any

    @property
    def succeeded(self) -> bool:
        return bool(self.remainder.is_zero())


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Settings for a verification run, merged from setup.cfg and CLI flags."""

    seed: int = 7
    trials: int = 50
    m_max: int = 4
    n_max: int = 4
    suite: str = "all"
    workers: int = 1
    batch_size: int = 10
    sample_max: int = 20
    int_max: int = 6
    input_path: str | None = None
    output_path: str | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InputError(f"trials must be at least 1, got {self.trials}")
        if not (1 <= self.m_max <= 6 and 1 <= self.n_max <= 6):
            raise InputError(f"size bounds must lie in [1, 6], got m_max={self.m_max}, n_max={self.n_max}")
        if self.workers < 1 or self.batch_size < 1:
            raise InputError("workers and batch_size must be positive")
        if self.sample_max < 1 or self.int_max < 0:
            raise InputError("sample_max must be positive and int_max nonnegative")
