from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcrystal.errors import GcrystalError, InputError, NonInvertible, ZeroDenominator
from gcrystal.semifield import (
    ABSENT,
    GEOMETRIC,
    TROPICAL,
    TropInt,
    format_value,
    gmax,
    parse_rational,
    parse_value,
    rat_make,
    semifield_of,
)
from tests.conftest import positive_rationals

trop_ints = st.builds(TropInt, st.integers(-20, 20))


###########
# Rationals
###########


def test_rat_make_normalizes() -> None:
    """6/-4 is stored as -3/2."""
    assert rat_make(6, -4) == Fraction(-3, 2)


def test_rat_make_zero_denominator() -> None:
    with pytest.raises(ZeroDenominator):
        rat_make(1, 0)


def test_zero_denominator_is_still_a_zero_division_error() -> None:
    assert issubclass(ZeroDenominator, ZeroDivisionError)
    assert issubclass(ZeroDenominator, GcrystalError)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3/4", Fraction(3, 4)),
        ("6/-4", Fraction(-3, 2)),
        ("5", Fraction(5)),
        (7, Fraction(7)),
        (" 2/6 ", Fraction(1, 3)),
    ],
)
def test_parse_rational(text: str | int, expected: Fraction) -> None:
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["x", "1/y", "", True, 1.5, None])
def test_parse_rational_rejects_garbage(bad: object) -> None:
    with pytest.raises(InputError):
        parse_rational(bad)  # type: ignore[arg-type]


###########
# Tropical integers
###########


def test_tropical_operations() -> None:
    """min for addition, + for multiplication, - for division."""
    assert TropInt(3) + TropInt(-2) == TropInt(-2)
    assert TropInt(3) * TropInt(-2) == TropInt(1)
    assert TropInt(3) / TropInt(5) == TropInt(-2)
    assert TropInt(4) ** 3 == TropInt(12)
    assert int(TropInt(9)) == 9


def test_absent_is_additive_identity_and_absorbing() -> None:
    assert ABSENT + TropInt(4) == TropInt(4)
    assert TropInt(4) + ABSENT == TropInt(4)
    assert TropInt(4) * ABSENT is ABSENT
    assert ABSENT * TropInt(4) is ABSENT
    assert TROPICAL.is_zero(ABSENT)
    assert not TROPICAL.is_zero(TropInt(0))


@given(trop_ints, trop_ints, trop_ints)
def test_tropical_semifield_axioms(a: TropInt, b: TropInt, c: TropInt) -> None:
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert TROPICAL.inv(TROPICAL.inv(a)) == a
    assert a * TROPICAL.one == a


@given(positive_rationals, positive_rationals, positive_rationals)
def test_geometric_semifield_axioms(a: Fraction, b: Fraction, c: Fraction) -> None:
    assert a * (b + c) == a * b + a * c
    assert GEOMETRIC.inv(GEOMETRIC.inv(a)) == a


def test_geometric_zero_is_not_invertible() -> None:
    with pytest.raises(NonInvertible):
        GEOMETRIC.inv(Fraction(0))


def test_semifield_of() -> None:
    assert semifield_of(Fraction(1, 2)) is GEOMETRIC
    assert semifield_of(3) is GEOMETRIC
    assert semifield_of(TropInt(3)) is TROPICAL
    with pytest.raises(InputError):
        semifield_of("3")


def test_sum_and_product_of_nothing() -> None:
    assert GEOMETRIC.sum([]) == 0
    assert GEOMETRIC.product([]) == 1
    assert TROPICAL.sum([]) is ABSENT
    assert TROPICAL.product([]) == TropInt(0)


def test_lift() -> None:
    assert GEOMETRIC.lift(3) == Fraction(3)
    assert TROPICAL.lift(3) == TropInt(3)


###########
# gmax
###########


class TestGmax:
    def test_two_values(self) -> None:
        """gmax(2, 3) = 1/(1/2 + 1/3) = 6/5."""
        assert gmax([Fraction(2), Fraction(3)]) == Fraction(6, 5)

    def test_empty_is_one(self) -> None:
        assert gmax([]) == 1
        assert gmax([], TROPICAL) == TropInt(0)

    def test_tropical_gmax_is_max(self) -> None:
        assert gmax([TropInt(2), TropInt(7), TropInt(-1)]) == TropInt(7)

    @given(positive_rationals, st.integers(1, 6))
    def test_repeated_value(self, a: Fraction, k: int) -> None:
        assert gmax([a] * k) == a / k

    def test_zero_raises(self) -> None:
        with pytest.raises(NonInvertible):
            gmax([Fraction(0), Fraction(1)])


###########
# JSON scalars
###########


def test_format_value() -> None:
    assert format_value(Fraction(-3, 2)) == "-3/2"
    assert format_value(Fraction(4)) == "4"
    assert format_value(TropInt(-5)) == -5
    assert format_value(ABSENT) is None


def test_parse_value() -> None:
    assert parse_value("3/9", GEOMETRIC) == Fraction(1, 3)
    assert parse_value(4, TROPICAL) == TropInt(4)
    assert parse_value(None, TROPICAL) is ABSENT
    with pytest.raises(InputError):
        parse_value("4", TROPICAL)
