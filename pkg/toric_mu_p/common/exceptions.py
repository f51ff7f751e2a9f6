"""Exception classes for the toric-mu-p package.

Each category fixes the exit code reported by the command line.
"""

EXIT_SUCCESS = 0
EXIT_INVALID_FAN = 2
EXIT_NOT_MU_P = 3
EXIT_PARSE_ERROR = 4
EXIT_VERIFICATION_FAILED = 5


class ToricQuotientError(Exception):
    """Base exception class for all toric-mu-p errors."""

    exit_code: int = EXIT_INVALID_FAN

    def __init__(self, message: str, *, stage: str | None = None) -> None:
        super().__init__(message)
        self.stage = stage

    def __str__(self) -> str:
        message = super().__str__()
        if self.stage:
            return f"[{self.stage}] {message}"
        return message


class InvalidFanError(ToricQuotientError):
    """The fan is malformed or violates the smooth/complete hypotheses."""

    exit_code = EXIT_INVALID_FAN


class NotSmoothCone(InvalidFanError):
    """A maximal cone is not unimodular."""


class NotComplete(InvalidFanError):
    """The fan is not complete, so graded pieces are unbounded."""


class NotProjective(InvalidFanError):
    """Projectivity was required but no strictly convex support function exists."""


class TorsionClassGroup(InvalidFanError):
    """The class group has torsion."""


class InvalidClassError(InvalidFanError):
    """A class vector has the wrong length or is otherwise unusable."""


class InconsistentOverlattice(InvalidFanError):
    """Different charts produced different overlattices."""


class InvalidQuotient(InvalidFanError):
    """The overlattice does not have index p over N."""


class InvalidLocalizer(InvalidFanError):
    """A localizing monomial is not invariant or not in the irrelevant ideal."""


class NotMuPError(ToricQuotientError):
    """The vector field does not define a mu_p action usable by the pipeline."""

    exit_code = EXIT_NOT_MU_P


class NotMuP(NotMuPError):
    """D^p is not congruent to D modulo Euler relations, or D is zero."""


class NotPClosed(NotMuPError):
    """D^p is not a nonzero scalar multiple of D."""


class NeedsFieldExtension(NotMuPError):
    """The rescaling root does not exist in the working field."""

    def __init__(
        self, message: str, *, minimal_degree: int, stage: str | None = None
    ) -> None:
        super().__init__(message, stage=stage)
        self.minimal_degree = minimal_degree


class NoExactLift(NotMuPError):
    """No Euler shift of D satisfies D^p = D exactly."""


class NotDiagonalizable(NotMuPError):
    """A block of D does not satisfy M^p = M."""


class NotIdempotentUnderP(NotDiagonalizable):
    """A field matrix does not satisfy M^p = M."""


class NoAutomorphismSelection(NotMuPError):
    """No choice of eigenvectors extends to a graded automorphism."""


class NotRegularOnChart(NotMuPError):
    """A chart restriction has a pole."""


class TrivialAction(NotMuPError):
    """The vector field vanishes modulo Euler relations on every chart."""


class InputParseError(ToricQuotientError):
    """An input document could not be read, parsed or validated."""

    exit_code = EXIT_PARSE_ERROR


class VerificationFailed(ToricQuotientError):
    """An independent verification check failed."""

    exit_code = EXIT_VERIFICATION_FAILED
