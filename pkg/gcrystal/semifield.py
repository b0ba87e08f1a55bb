"""
Exact scalars and the semifield contract everything else is generic over.

Two carriers are used for computation:
    - the positive rationals, as `fractions.Fraction` (geometric mode), and
    - TropInt, integers under (min, +, -) (tropical mode).

Code written only with +, * and / (and `sf.one`) runs unchanged over both, which is how
tropicalization is realized: re-running a subtraction-free routine over TropInt computes
its piecewise-linear shadow pointwise.

Tropical matrices need an additive zero that min() does not have, so ABSENT marks
structural zeros. It absorbs under * and is the identity under +.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import singledispatch
from typing import Any, Protocol

from gcrystal.errors import InputError, NonInvertible, ZeroDenominator

logger = logging.getLogger(__name__)


class Scalar(Protocol):
    def __add__(self, other: Any) -> Any:
        ...

    def __mul__(self, other: Any) -> Any:
        ...

    def __truediv__(self, other: Any) -> Any:
        ...


def rat_make(num: int, den: int = 1) -> Fraction:
    """Build the normalized rational num/den. Raises ZeroDenominator when den == 0."""
    if den == 0:
        raise ZeroDenominator(f"{num}/0 has a zero denominator")
    return Fraction(num, den)


def parse_rational(text: str | int) -> Fraction:
    """
    Parse "p/q", "p" or a bare integer into a Fraction.

    >>> parse_rational("6/-4")
    Fraction(-3, 2)
    """
    if isinstance(text, bool):
        raise InputError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"not a rational: {text!r}")
    num, sep, den = text.strip().partition("/")
    try:
        return rat_make(int(num), int(den) if sep else 1)
    except ValueError as err:
        raise InputError(f"not a rational: {text!r}") from err


@dataclass(frozen=True, slots=True, order=True)
class TropInt:
    """An integer in the min-plus semifield: a + b = min(a, b), a * b = a + b."""

    value: int

    def __add__(self, other: object) -> TropInt:
        if isinstance(other, TropInt):
            return TropInt(min(self.value, other.value))
        return NotImplemented

    def __mul__(self, other: object) -> TropInt:
        if isinstance(other, TropInt):
            return TropInt(self.value + other.value)
        return NotImplemented

    def __truediv__(self, other: object) -> TropInt:
        if isinstance(other, TropInt):
            return TropInt(self.value - other.value)
        return NotImplemented

    def __pow__(self, k: int) -> TropInt:
        return TropInt(self.value * k)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"TropInt({self.value})"

    def __str__(self) -> str:
        return str(self.value)


class _Absent:
    """Structural zero of tropical matrices."""

    _instance: _Absent | None = None

    def __new__(cls) -> _Absent:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other: Any) -> Any:
        return other

    __radd__ = __add__

    def __mul__(self, other: Any) -> _Absent:
        return self

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> _Absent:
        return self

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "ABSENT"

    def __reduce__(self) -> str:
        return "ABSENT"


ABSENT = _Absent()


@dataclass(frozen=True, slots=True)
class Semifield:
    """
    The carrier contract: {one} and {zero} are the identities used to build matrices,
    {has_subtraction} gates determinant routines and {has_division} gates elimination.
    """

    name: str
    one: Any
    zero: Any
    has_subtraction: bool
    has_division: bool = True

    def inv(self, a: Any) -> Any:
        if self.is_zero(a):
            raise NonInvertible(f"{a!r} is not invertible in the {self.name} carrier")
        return self.one / a

    def is_zero(self, a: Any) -> bool:
        return a is ABSENT or (self.has_subtraction and a == self.zero)

    def sum(self, values: Iterable[Any]) -> Any:
        total = self.zero
        for v in values:
            total = total + v
        return total

    def product(self, values: Iterable[Any]) -> Any:
        total = self.one
        for v in values:
            total = total * v
        return total

    def lift(self, n: int) -> Any:
        """Embed an integer: as a rational in geometric mode, as a tropical exponent otherwise."""
        if not self.has_subtraction:
            return TropInt(n)
        return self.one * n


GEOMETRIC = Semifield("geometric", Fraction(1), Fraction(0), has_subtraction=True)
TROPICAL = Semifield("tropical", TropInt(0), ABSENT, has_subtraction=False)


@singledispatch
def semifield_of(value: Any) -> Semifield:
    """The carrier a value lives in. Other carriers register themselves here."""
    raise InputError(f"no semifield for {type(value).__name__}")


@semifield_of.register
def _(value: Fraction) -> Semifield:
    return GEOMETRIC


@semifield_of.register
def _(value: int) -> Semifield:
    return GEOMETRIC


@semifield_of.register
def _(value: TropInt) -> Semifield:
    return TROPICAL


def gmax(values: Iterable[Any], sf: Semifield | None = None) -> Any:
    """
    The geometric maximum 1/(1/v_1 + ... + 1/v_k), with gmax() = one.

    Tropically this is max(v_1, ..., v_k). Raises NonInvertible on a rational zero.
    """
    values = list(values)
    if not values:
        return (sf or GEOMETRIC).one
    sf = sf or semifield_of(values[0])
    return sf.inv(sf.sum(sf.inv(v) for v in values))


def format_value(v: Any) -> str | int | None:
    """JSON form of a scalar: "p/q" strings for rationals, integers for TropInt."""
    match v:
        case TropInt(value=n):
            return n
        case Fraction() | int():
            return str(Fraction(v))
        case _ if v is ABSENT:
            return None
        case _:
            raise InputError(f"cannot format {v!r}")


def parse_value(obj: Any, sf: Semifield) -> Any:
    """Inverse of format_value for the given carrier."""
    if obj is None:
        return sf.zero
    if sf is TROPICAL:
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise InputError(f"tropical values are integers, got {obj!r}")
        return TropInt(obj)
    return parse_rational(obj)
