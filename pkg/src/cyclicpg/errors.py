"""Exception types raised by cyclicpg."""


class CyclicPGError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedSize(CyclicPGError, ValueError):
    pass


class NotIrreducible(CyclicPGError, ValueError):
    pass


class ZeroToNegativePower(CyclicPGError, ZeroDivisionError):
    pass


class NotInSubfield(CyclicPGError, ValueError):
    pass


class ParityError(CyclicPGError, ValueError):
    """Raised when a construction needs q = 2^m with m odd (and often m >= 3)."""


class NotAPoint(CyclicPGError, ValueError):
    pass


class ConditionViolated(CyclicPGError, ValueError):
    """A pair (alpha, beta) does not describe a line of the cyclic model."""


class DegeneratePair(CyclicPGError, ValueError):
    pass


class OutOfDomain(CyclicPGError, ValueError):
    pass


class NotOnOvoid(CyclicPGError, ValueError):
    pass


class DomainTooLarge(CyclicPGError, ValueError):
    pass


class UnknownCheck(CyclicPGError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown check"


class ParseError(CyclicPGError, ValueError):
    pass
