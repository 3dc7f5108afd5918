"""Exception hierarchy for the whole package.

Two families matter to callers:

* hard errors (bad input, broken invariants) derive from ``SectionRingError``
  directly and abort a run;
* ``VerificationFailure`` subclasses signal that a mathematical check came out
  false.  The pipeline catches these, records the failing stage in the
  certificate and reports a FAIL verdict instead of crashing.
"""


class SectionRingError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(SectionRingError):
    """Unusable run configuration (bad key, bad value, invalid curve data)."""


class IoError(SectionRingError):
    """Certificate could not be written."""


# ----------------------------------------------------------------- algebra

class ZeroPolynomial(SectionRingError):
    """Operation undefined for the zero polynomial."""


# ------------------------------------------------------------------- curve

class NotPrime(SectionRingError):
    """Modulus is not an odd prime in the supported range (p >= 11)."""


class NotMonic(SectionRingError):
    """Defining polynomial must be monic."""


class NotSquarefree(SectionRingError):
    """Defining polynomial shares a root with its derivative (singular model)."""


class EvenDegree(SectionRingError):
    """Only odd-degree models (one point at infinity) are supported."""


class GenusTooSmall(SectionRingError):
    """Genus below 2; the construction degenerates there."""


class CurveMismatch(SectionRingError):
    """Operands live on different curves."""


# ---------------------------------------------------------- function field

class ZeroElement(SectionRingError):
    """Operation undefined for the zero function (e.g. principal divisor)."""


class PrecisionTooSmall(SectionRingError):
    """Requested series precision below 1."""


class PrecisionEscalationFailed(SectionRingError):
    """Internal consistency failure: an expansion vanished past its norm bound.

    Valuations are computed with a precision derived from the norm of the
    element, which provably suffices; reaching this error means a bug, not a
    hard instance.
    """


# ----------------------------------------------------------- verification

class VerificationFailure(SectionRingError):
    """A mathematical acceptance check failed; payload names the condition."""


class TooFewPoints(SectionRingError):
    """Curve has fewer rational places than the divisor degree needs."""


class ExhaustedTries(SectionRingError):
    """Randomized search used up its budget (a larger prime usually helps)."""


class ConditionFailed(VerificationFailure):
    """A divisor certificate condition failed; ``condition`` names it."""

    def __init__(self, condition, message=""):
        self.condition = condition
        super().__init__(f"{condition}: {message}" if message else condition)


class GradingViolation(SectionRingError):
    """An element claimed for a graded piece does not lie in it."""


class HilbertMismatch(VerificationFailure):
    """Computed Hilbert data disagrees with the closed form."""


class NotStandardGraded(VerificationFailure):
    """Degree-one pieces fail to generate."""


class SequenceFailure(VerificationFailure):
    """One of the section multiplication sequences is not exact."""


class WrongSyzygyDimension(VerificationFailure):
    """Degree-one syzygy space of (alpha, beta) does not have dimension 2."""


class NotSquareZero(VerificationFailure):
    """Syzygy matrix fails A*A = 0."""


class NonzeroDeterminant(VerificationFailure):
    """Syzygy matrix fails det A = 0."""


class ExactnessFailure(VerificationFailure):
    """Periodic complex not exact at some internal degree."""


class DualityFailure(VerificationFailure):
    """Dual module dimensions or intertwiner check failed."""


class ExtNonzero(VerificationFailure):
    """A windowed Ext group came out nonzero."""


class TypeMismatch(VerificationFailure):
    """Cohen-Macaulay type disagrees with the genus."""


class GenerationFailure(VerificationFailure):
    """Canonical module not generated in degree zero at some twist."""


class BettiMismatch(VerificationFailure):
    """Betti numbers differ from the constant value 2."""


class ArtinianExactnessFailure(VerificationFailure):
    """im != ker for the reduced matrix on the artinian quotient."""


class FreenessDetected(VerificationFailure):
    """Reduced module is free, contradicting the expected nonfreeness."""


class SocleMismatch(VerificationFailure):
    """Socle of the artinian reduction is not the top graded piece."""
