"""Exception types raised across the package.

Every error carries a short stable ``code`` string so command line tools can
emit machine readable error records without matching on class names.
"""


class WeightSeqError(Exception):
    """Base class for all package errors."""

    code = "error"


class NonFinite(WeightSeqError):
    """Input contains NaN or infinite entries."""

    code = "non-finite"


class NotNormalized(WeightSeqError):
    """First log quotient is below the normalization tolerance."""

    code = "not-normalized"


class TailMismatch(WeightSeqError):
    """Stored quotients disagree with the declared tail model."""

    code = "tail-mismatch"


class BeyondHorizon(WeightSeqError):
    """Index past the stored range and the tail model cannot supply it."""

    code = "beyond-horizon"


class TailRequired(WeightSeqError):
    """Operation needs a tail model but the sequence has none."""

    code = "tail-required"


class TailUnknown(WeightSeqError):
    """A certified answer was requested but the tail model is Unknown."""

    code = "tail-unknown"


class Quasianalytic(WeightSeqError):
    """Construction requires a convergent reciprocal quotient sum."""

    code = "quasianalytic"


class NotLogConvex(WeightSeqError):
    """Construction requires nondecreasing log quotients."""

    code = "not-log-convex"


class HorizonTooSmall(WeightSeqError):
    """Stored range is too short for the requested construction."""

    code = "horizon-too-small"


class ScheduleInvalid(WeightSeqError):
    """Block schedule violates a structural requirement."""

    code = "schedule-invalid"


class OverflowHalt(WeightSeqError):
    """Magnitudes left the representable range; partial data may be attached."""

    code = "overflow"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class VerificationFailed(WeightSeqError):
    """A block verification check did not hold."""

    code = "verification-failed"

    def __init__(self, message, block=None, which=""):
        super().__init__(message)
        self.block = block
        self.which = which


class RemainderUnbounded(WeightSeqError):
    """Integral remainder cannot be bounded from the tail model."""

    code = "remainder-unbounded"


class TruncationTooSmall(WeightSeqError):
    """Truncation index is below the first dominant term."""

    code = "truncation-too-small"


class FormatError(WeightSeqError):
    """Malformed interchange text."""

    code = "format"
