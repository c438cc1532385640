"""Exception hierarchy for the package."""


class CommutingClassesError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(CommutingClassesError):
    pass


class KindMismatch(CommutingClassesError):
    pass


class NotNormal(CommutingClassesError):
    pass


class QuotientNotCyclic(CommutingClassesError):
    pass


class NotCoprime(CommutingClassesError):
    pass


class NotPrimeIndex(CommutingClassesError):
    pass


class NotPrime(CommutingClassesError):
    pass


class TooLarge(CommutingClassesError):
    pass


class SizeMismatch(CommutingClassesError):
    pass


class EvenField(CommutingClassesError):
    pass


class ParseError(CommutingClassesError):
    pass


class TheoremViolation(CommutingClassesError):
    """A computed object contradicts a proved statement; always a bug."""


class CountMismatch(TheoremViolation):
    pass


class NonCentralUniversalClass(TheoremViolation):
    pass


class MatchingIncomplete(TheoremViolation):
    pass


class PartitionDefect(TheoremViolation):
    pass


class CrosscheckFailure(TheoremViolation):
    pass


class SchemeDefect(TheoremViolation):
    pass


class EquivalenceFailure(TheoremViolation):
    pass
