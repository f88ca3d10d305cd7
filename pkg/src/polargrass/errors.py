"""Exception hierarchy.

Every domain error derives from :class:`PolarError`; the CLI reports the
class name and exits with status 1.
"""

from __future__ import annotations


class PolarError(Exception):
    """Base class for all domain errors raised by this package."""


# field construction / arithmetic
class NonPrime(PolarError, ValueError):
    pass


class ReducibleModulus(PolarError, ValueError):
    pass


class DivisionByZero(PolarError, ZeroDivisionError):
    pass


class EvenCharacteristic(PolarError, ValueError):
    pass


class OddCharacteristic(PolarError, ValueError):
    pass


class ZeroInput(PolarError, ValueError):
    pass


# geometry / matrices
class WrongVariant(PolarError, ValueError):
    pass


class DimensionMismatch(PolarError, ValueError):
    pass


class NotRREF(PolarError, ValueError):
    pass


class RankDeficient(PolarError, ValueError):
    pass


class NotSingularLine(PolarError, ValueError):
    pass


class InvalidPrefix(PolarError, ValueError):
    pass


# counting / enumeration
class BadParity(PolarError, ValueError):
    pass


class BadParameter(PolarError, ValueError):
    pass


class InvalidParameters(PolarError, ValueError):
    pass


class IndexOutOfRange(PolarError, IndexError):
    pass


class TooLarge(PolarError, RuntimeError):
    pass


# codec
class LengthMismatch(PolarError, ValueError):
    pass


class BadLength(LengthMismatch):
    pass


class BadPair(PolarError, ValueError):
    pass


class NoPlanes(PolarError, ValueError):
    pass


class Undecided(PolarError, RuntimeError):
    pass
