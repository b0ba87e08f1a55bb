"""Seeded random inputs for the verification suites."""
from __future__ import annotations

import random
from fractions import Fraction

from gcrystal.datatypes import ExponentMatrix, GTPattern, MatrixGrid, gt_indices
from gcrystal.matrices import SfMatrix, det_laplace
from gcrystal.semifield import GEOMETRIC


class Sampler:
    """
    Draws positive rationals p/q with p, q uniform in [1, {sample_max}] and integers in
    [0, {int_max}]. Two samplers built from the same seed produce the same stream.
    """

    def __init__(self, seed: int, sample_max: int = 20, int_max: int = 6) -> None:
        self.rng = random.Random(seed)
        self.sample_max = sample_max
        self.int_max = int_max

    def rational(self) -> Fraction:
        return Fraction(self.rng.randint(1, self.sample_max), self.rng.randint(1, self.sample_max))

    def dims(self, lo: int, m_max: int, n_max: int | None = None) -> tuple[int, int]:
        return self.rng.randint(lo, max(lo, m_max)), self.rng.randint(lo, max(lo, n_max or m_max))

    def index(self, size: int) -> int:
        """A crystal index in [1, size - 1]."""
        return self.rng.randint(1, size - 1)

    def grid(self, m: int, n: int) -> MatrixGrid:
        return MatrixGrid(tuple(tuple(self.rational() for _ in range(n)) for _ in range(m)))

    def pattern(self, m: int, n: int) -> GTPattern:
        """A point of the positive torus of GT_n^{<=m}; geometric patterns need not interlace."""
        return GTPattern(m, n, {k: self.rational() for k in gt_indices(m, n)})

    def int_grid(self, m: int, n: int) -> list[list[int]]:
        return [[self.rng.randint(0, self.int_max) for _ in range(n)] for _ in range(m)]

    def invertible(self, n: int) -> SfMatrix:
        """A random n x n rational matrix with nonzero determinant, signs included."""
        while True:
            entries = tuple(tuple(self.rational() * self.rng.choice((1, -1)) for _ in range(n)) for _ in range(n))
            mat = SfMatrix(entries, GEOMETRIC)
            if det_laplace(mat) != 0:
                return mat

    def partition(self, length: int, largest: int) -> tuple[int, ...]:
        parts = sorted((self.rng.randint(0, largest) for _ in range(length)), reverse=True)
        return tuple(v for v in parts if v)

    def dominant(self, m: int, n: int, largest: int = 3) -> ExponentMatrix:
        """Exponent matrix with weakly decreasing columns."""
        cols = [sorted((self.rng.randint(0, largest) for _ in range(m)), reverse=True) for _ in range(n)]
        return ExponentMatrix(tuple(tuple(cols[b][a] for b in range(n)) for a in range(m)))
