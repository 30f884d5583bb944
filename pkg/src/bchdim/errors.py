"""Exception hierarchy.

Every error raised on a bad argument derives from :class:`BchError`, which is
itself a :class:`ValueError`, so callers can catch either.
"""


class BchError(ValueError):
    pass


class ValueOutOfRange(BchError):
    pass


class LengthMismatch(BchError):
    pass


class IntegerOverflow(BchError, OverflowError):
    pass


class NotCoprime(BchError):
    pass


class BadRange(BchError):
    pass


class BadLambda(BchError):
    pass


class BadIndex(BchError):
    pass


class BandMismatch(BchError):
    pass


class OddM(BchError):
    pass


class WrongParity(BchError):
    pass


class OddX(BchError):
    pass


class NotMember(BchError):
    pass


class NotPrimePower(BchError):
    pass


class OutOfTheoremRange(BchError):
    pass


class UnsupportedRange(BchError):
    pass


class NotAnInteger(BchError):
    pass


class QDividesDelta(BchError):
    pass


class NotEligible(BchError):
    pass


class OrbitTooLong(BchError):
    pass
