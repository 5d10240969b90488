"""Exception types shared across the engine."""


class PVI6Error(Exception):
    """Base class for all engine errors."""


class DivisionByZero(PVI6Error, ZeroDivisionError):
    pass


class IncompatibleExtensions(PVI6Error):
    """Arithmetic between elements of two distinct quadratic extensions."""


class UnsupportedExtension(PVI6Error):
    """A value would need an algebraic extension the engine does not model."""


class ZeroSeries(PVI6Error):
    """Inversion (or similar) of a series that is zero to its known order."""


class UnknownOrder(PVI6Error):
    """A series is zero to its known order, so its order cannot be certified."""


class InsufficientTerms(PVI6Error):
    """Not enough known coefficients for the requested reconstruction."""


class InsufficientKnownOrder(PVI6Error):
    """Previously computed coefficients are too short for the requested order."""


class NonIntegerGrade(PVI6Error):
    """A power transformation left the integer exponent lattice."""


class ConstraintViolation(PVI6Error):
    """Family preconditions on the parameters do not hold."""


class TruncationResidualNonzero(PVI6Error):
    """A claimed truncated solution does not annihilate the truncated sum.

    Carries the first offending coefficient in ``offender``.
    """

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class ResonantHead(PVI6Error):
    """The recurrence head vanishes at a needed exponent."""


class InconsistentTruncation(PVI6Error):
    """A coefficient equation admits no Laurent solution at the needed order."""


class NotASingularPoint(PVI6Error):
    pass


class NotFuchsian(PVI6Error):
    pass


class HigherLogUnsupported(PVI6Error):
    """Local solution shape needs a log power beyond the supported range."""


class ConfigParseError(PVI6Error):
    pass
