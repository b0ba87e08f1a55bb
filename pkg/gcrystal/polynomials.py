"""
Sparse polynomials with rational coefficients in the variables x_a^b.

A monomial is a tuple of ((a, b), exponent) pairs sorted by (a, b). Variables are ordered
x_1^1 > x_1^2 > ... > x_1^n > x_2^1 > ..., and monomials are compared lexicographically in
that order.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any

from gcrystal.datatypes import MatrixGrid
from gcrystal.errors import CapabilityError, InputError
from gcrystal.semifield import Semifield, semifield_of

Monomial = tuple[tuple[tuple[int, int], int], ...]
Scalar = int | Fraction


def monomial_mul(u: Monomial, v: Monomial) -> Monomial:
    exps = dict(u)
    for var, e in v:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def lex_key(mono: Monomial) -> tuple[tuple[tuple[int, int], int], ...]:
    """Sort key under which a larger key means a lex-larger monomial."""
    return tuple(((-a, -b), e) for (a, b), e in mono)


class LoopPoly:
    """An immutable sparse polynomial. Zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        cleaned: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if c:
                cleaned[tuple(sorted((var, e) for var, e in mono if e))] = Fraction(c)
        self._terms = cleaned
        self._hash: int | None = None

    @classmethod
    def const(cls, c: Scalar) -> LoopPoly:
        return cls({(): c})

    @classmethod
    def zero(cls) -> LoopPoly:
        return cls()

    @classmethod
    def one(cls) -> LoopPoly:
        return cls.const(1)

    @classmethod
    def var(cls, a: int, b: int) -> LoopPoly:
        """The plain variable x_a^b."""
        if a < 1 or b < 1:
            raise InputError(f"variable indices must be positive, got ({a}, {b})")
        return cls({(((a, b), 1),): 1})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def monomials(self) -> Iterator[tuple[Monomial, Fraction]]:
        yield from self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e for _, e in mono) for mono in self._terms), default=0)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def leading_monomial(self, among: Iterable[Monomial] | None = None) -> Monomial | None:
        """The lex-largest monomial, optionally restricted to {among}."""
        pool = list(self._terms if among is None else among)
        return max(pool, key=lex_key) if pool else None

    def evaluate(self, x: MatrixGrid) -> Any:
        """Substitute x_a^b = x.entry(a, b)."""
        sf = x.semifield
        total = sf.zero
        for mono, c in self._terms.items():
            term = sf.product(x.entry(a, b) ** e for (a, b), e in mono)
            total = total + term * c
        return total

    # arithmetic

    @staticmethod
    def _coerce(other: Any) -> LoopPoly | None:
        if isinstance(other, LoopPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LoopPoly.const(other)
        return None

    def __add__(self, other: Any) -> LoopPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in rhs._terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return LoopPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LoopPoly:
        return LoopPoly({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: Any) -> LoopPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> LoopPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> LoopPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for u, c in self._terms.items():
            for v, d in rhs._terms.items():
                w = monomial_mul(u, v)
                out[w] = out.get(w, Fraction(0)) + c * d
        return LoopPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LoopPoly:
        if k < 0:
            raise CapabilityError("negative powers are not polynomials")
        out = LoopPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other: Any) -> LoopPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero() or any(mono for mono in rhs._terms):
            raise CapabilityError("polynomials only divide by nonzero constants")
        c = rhs._terms[()]
        return LoopPoly({mono: v / c for mono, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LoopPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=lex_key, reverse=True):
            c = self._terms[mono]
            body = "*".join(f"x{a}^{b}" + (f"**{e}" if e > 1 else "") for (a, b), e in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


POLYNOMIAL = Semifield("polynomial", LoopPoly.one(), LoopPoly.zero(), has_subtraction=True, has_division=False)


@semifield_of.register
def _(value: LoopPoly) -> Semifield:
    return POLYNOMIAL


def symbolic_grid(m: int, n: int) -> MatrixGrid:
    """The generic point whose (a, b) entry is the variable x_a^b."""
    return MatrixGrid(tuple(tuple(LoopPoly.var(a, b) for b in range(1, n + 1)) for a in range(1, m + 1)))


def loop_var(a: int, r: int, n: int) -> LoopPoly:
    """x_a^{(r)}, the variable of loop color r in row a: x_a^{((r - a) mod n) + 1}."""
    return LoopPoly.var(a, (r - a) % n + 1)
