"""Log-convex weight sequences: tail-sum enclosures, nonquasianalyticity
conditions, optimal comparison sequences, associated weight functions, and
the iterative block construction with unbounded profile."""

from .errors import (
    BeyondHorizon,
    FormatError,
    HorizonTooSmall,
    NonFinite,
    NotLogConvex,
    NotNormalized,
    OverflowHalt,
    Quasianalytic,
    RemainderUnbounded,
    ScheduleInvalid,
    TailMismatch,
    TailRequired,
    TailUnknown,
    TruncationTooSmall,
    VerificationFailed,
    WeightSeqError,
)
from .intervals import Interval, TriState, Verdict
from .sequences import (
    LCReport,
    PowerTail,
    RatioTail,
    Unknown,
    UnknownTail,
    WeightSequence,
    check_LC,
    from_quotients,
    gevrey,
    is_log_convex,
    log_factorial,
    power_quotient_family,
    quotients_diverge,
)
from .tails import (
    gamma1_profile,
    is_nonquasianalytic,
    nongamma2_profile,
    tail_sum,
)
from .conditions import (
    AlmostIncreasingResult,
    ConditionReport,
    PreceqResult,
    almost_increasing_defect,
    check_SV,
    check_SV_ramified,
    check_gamma1,
    check_mg,
    check_mixed_gamma1,
    check_mixed_gamma_r,
    lambda_ps,
    preceq_defect,
)
from .constructions import (
    DescendantResult,
    MinorantResult,
    OptimalSequenceResult,
    descendant,
    log_convex_minorant,
    modified_descendant,
    optimal_sequence,
    ramified_descendant,
    ramified_optimal,
    ramified_root,
)
from .weights import (
    WeightPairReport,
    check_snq,
    default_t_grid,
    kappa,
    omega,
    recover_sequence,
    theta_jet,
)
from .counterexample import (
    BlockCheck,
    BlockRecord,
    BuildResult,
    VerifyReport,
    build_counterexample,
    default_a_schedule,
    verify_blocks,
)
from .serialization import (
    read_blocks,
    read_condition_report,
    read_sequence,
    write_blocks,
    write_condition_report,
    write_sequence,
    write_verify_report,
)

__version__ = "0.1.0"

__all__ = [
    "WeightSeqError", "NonFinite", "NotNormalized", "TailMismatch",
    "BeyondHorizon", "TailRequired", "TailUnknown", "Quasianalytic",
    "NotLogConvex", "HorizonTooSmall", "ScheduleInvalid", "OverflowHalt",
    "VerificationFailed", "RemainderUnbounded", "TruncationTooSmall",
    "FormatError",
    "Interval", "TriState", "Verdict",
    "WeightSequence", "PowerTail", "RatioTail", "UnknownTail", "Unknown",
    "from_quotients", "gevrey", "power_quotient_family", "log_factorial",
    "check_LC", "LCReport", "is_log_convex", "quotients_diverge",
    "tail_sum", "is_nonquasianalytic", "gamma1_profile", "nongamma2_profile",
    "ConditionReport", "check_gamma1", "check_mg", "check_SV",
    "check_mixed_gamma1", "check_SV_ramified", "check_mixed_gamma_r",
    "lambda_ps", "preceq_defect", "PreceqResult",
    "almost_increasing_defect", "AlmostIncreasingResult",
    "DescendantResult", "descendant", "modified_descendant",
    "OptimalSequenceResult", "optimal_sequence",
    "MinorantResult", "log_convex_minorant",
    "ramified_root", "ramified_optimal", "ramified_descendant",
    "omega", "recover_sequence", "kappa", "default_t_grid",
    "check_snq", "WeightPairReport", "theta_jet",
    "BlockRecord", "BuildResult", "BlockCheck", "VerifyReport",
    "build_counterexample", "verify_blocks", "default_a_schedule",
    "read_sequence", "write_sequence", "read_blocks", "write_blocks",
    "read_condition_report", "write_condition_report", "write_verify_report",
]
