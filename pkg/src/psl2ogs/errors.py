"""Exception hierarchy shared by every module of the package."""


class Psl2Error(Exception):
    """Base class for all errors raised by psl2ogs."""


class NotPrime(Psl2Error, ValueError):
    pass


class NotPrimePower(Psl2Error, ValueError):
    pass


class TooLarge(Psl2Error, ValueError):
    pass


class FieldMismatch(Psl2Error, TypeError):
    pass


class DivisionByZero(Psl2Error, ZeroDivisionError):
    pass


class OutOfRange(Psl2Error, ValueError):
    pass


class DetNotOne(Psl2Error, ValueError):
    pass


class InvalidA(Psl2Error, ValueError):
    pass


class InvalidB(Psl2Error, ValueError):
    pass


class NoValidA(Psl2Error, RuntimeError):
    pass


class NotOddCharacteristic(Psl2Error, ValueError):
    pass


class EvenCharacteristic(Psl2Error, ValueError):
    pass


class IndexOutOfRange(Psl2Error, IndexError):
    pass


class UnsupportedQ(Psl2Error, ValueError):
    pass


class InternalInvariantViolation(Psl2Error, AssertionError):
    """A structural fact the algorithms rely on did not hold.

    Seeing this means either a bad parameter slipped past validation or
    the arithmetic is broken; it is never an expected outcome.
    """
