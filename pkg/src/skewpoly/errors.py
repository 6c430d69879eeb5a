"""Exception hierarchy shared by all skewpoly modules."""


class SkewPolyError(Exception):
    """Base class for all domain errors raised by this package."""


class RingMismatch(SkewPolyError):
    """Operands belong to different coefficient rings or frames."""


class DivisionByZero(SkewPolyError):
    """Inversion of, or division by, the zero element."""


class NotFinite(SkewPolyError):
    """An enumeration was requested over an infinite division ring."""


class InvalidFrame(SkewPolyError):
    """A commutation frame failed validation.

    Carries the validation report (when available) on ``.report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ZeroPolynomial(SkewPolyError):
    """The zero polynomial has no leading monomial."""


class NoSolution(SkewPolyError):
    """The left linear system lambda * A = b is inconsistent."""


class DuplicatePoint(SkewPolyError):
    """A point occurs twice where a set of distinct points is required."""


class NotSeparable(SkewPolyError):
    """No separator exists: the point lies in the closure of the base set."""


class NotPIndependent(SkewPolyError):
    """An interpolation base set turned out to be P-dependent."""


class NotARing(SkewPolyError):
    """Quotient multiplication requested modulo a one-sided ideal."""


class InvalidInput(SkewPolyError):
    """A precondition on user-supplied data was violated."""
