"""Exception hierarchy shared by all modules."""


class LsplactoError(Exception):
    """Base class for all package errors."""


class UnsupportedType(LsplactoError):
    """Requested a (type, rank) combination outside the shipped tables."""


class IndexOutOfRange(LsplactoError):
    """Simple-root or fundamental-weight index outside 1..rank."""


class NonDominantWeight(LsplactoError):
    """An operation requiring a dominant weight received a non-dominant one."""


class IntegralityViolation(LsplactoError):
    """The minimum of a pairing function was not an integer.

    This signals that the input path lies outside the supported domain
    (concatenations of LS paths); it is never silently rounded.
    """


class FactorBoundaryViolation(LsplactoError):
    """A root operator tried to reflect across a factor boundary.

    Theoretically impossible on valid monomials; raised instead of
    asserting so the condition is diagnosable.
    """


class NonHighestSeed(LsplactoError):
    """Crystal generation was seeded with a non-highest monomial."""


class UnknownGenerator(LsplactoError):
    """A path could not be resolved to a generator id in the table."""


class BudgetExceeded(LsplactoError):
    """A step or length budget was exhausted."""


class LetterOutOfRange(LsplactoError):
    """A box-word letter is outside the alphabet 1..n."""
