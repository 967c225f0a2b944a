"""Exception hierarchy shared by every polyadic module."""


class PolyadicError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DigitOutOfRange(PolyadicError, ValueError):
    pass


class InsufficientDepth(PolyadicError):
    """The requested modulus does not divide the modulus of the tower."""


class Incompatible(PolyadicError):
    """Two residue claims disagree modulo the gcd of their moduli."""


class IndexOutOfRange(PolyadicError, IndexError):
    pass


class WidthMismatch(PolyadicError):
    pass


class NotYetStable(PolyadicError):
    """No stabilized tail was observed up to the horizon.

    This is evidence-only: it never means the sequence diverges.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnknownSuite(Exception):
    pass
