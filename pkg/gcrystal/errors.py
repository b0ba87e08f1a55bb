"""Exceptions raised by gcrystal. The CLI maps every GcrystalError to exit code 2."""


class GcrystalError(Exception):
    """Base class for all gcrystal errors."""


class ZeroDenominator(GcrystalError, ZeroDivisionError):
    """A rational was built with a zero denominator."""


class NonInvertible(GcrystalError):
    """A zero was passed where an invertible value is needed."""


class CapabilityError(GcrystalError):
    """The operation needs subtraction (or division) that the carrier lacks."""


class SingularMatrix(GcrystalError):
    """A matrix that must be inverted has determinant zero."""


class VanishingMinor(GcrystalError):
    """A minor used as a denominator evaluated to zero."""


class ForbiddenToggle(GcrystalError):
    """T_a^b was requested at the bottom-right corner (m, n)."""


class NotSemistandard(GcrystalError):
    """A tableau breaks the semistandard conditions or has an entry past its height."""


class NotDominant(GcrystalError):
    """An exponent matrix whose columns are not weakly decreasing."""


class InputError(GcrystalError):
    """Malformed input: bad JSON shape, bad value, or an index out of range."""
