"""Exception hierarchy.

Distinct classes let callers tell apart bad inputs, refused singular
operations, failed certifications, and genuine numerical breakdowns,
and let the CLI map them onto its documented exit codes.
"""


class SemigroupLabError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(SemigroupLabError):
    """An argument violates a documented precondition (bad shape, grid
    point out of range, non-finite entries, incompatible envelope)."""


class SingularityError(SemigroupLabError):
    """A resolvent was requested too close to the spectrum.

    Carries the offending eigenvalue and its distance to the shift.
    """

    def __init__(self, msg, eigenvalue=None, distance=None):
        super().__init__(msg)
        self.eigenvalue = eigenvalue
        self.distance = distance


class PreconditionError(SemigroupLabError):
    """A runtime precondition failed (e.g. a contraction factor reached 1).

    Carries the measured value so callers can report it.
    """

    def __init__(self, msg, value=None):
        super().__init__(msg)
        self.value = value


class CertificationError(SemigroupLabError):
    """An envelope or bound could not be certified within the search
    horizon. Carries the observed growth curve for diagnostics."""

    def __init__(self, msg, curve=None):
        super().__init__(msg)
        self.curve = curve if curve is not None else []


class ComputationError(SemigroupLabError):
    """A numerical routine failed (eigensolver non-convergence, violated
    postcondition)."""


class RangeError(SemigroupLabError):
    """A result is too large to represent in double precision."""


class ParseError(SemigroupLabError):
    """A matrix file could not be parsed. Carries the path and, when
    known, the offending line number."""

    def __init__(self, msg, path=None, line=None):
        super().__init__(msg)
        self.path = path
        self.line = line
