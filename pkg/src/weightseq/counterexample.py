"""Iterative block construction of a nonquasianalytic sequence with
unbounded gamma1 profile, plus independent verification of every
inequality the construction relies on.

The sequence is built from constant-quotient runs: a seed run at value 1,
then per block i an inner run on (p_i, q_i] and an outer run on
(q_i, p_{i+1}].  Block parameters follow the recurrences in log domain;
indices and A_i grow super-exponentially, so later blocks exist only as
records and the materialized sequence covers the prefix that fits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import OverflowHalt, ScheduleInvalid, VerificationFailed
from .intervals import Interval
from .sequences import WeightSequence, Unknown, log_factorial, _from_quotients_unchecked

# Construction constants.
SLACK = 1e-6                 # inequality headroom on every "large enough" choice
DEFAULT_A1 = 1e-4            # block-1 target level (block 1 is exempt from (I))
LOG_CAP = 1e300              # halt once any log-domain quantity passes this
LINEAR_SCAN_CAP = 700.0      # largest log still exponentiable to a linear index
DEFAULT_MAX_INDEX = 2_000_000
ANSATZ_RTOL = 1e-9

__all__ = [
    "BlockRecord",
    "BuildResult",
    "BlockCheck",
    "VerifyReport",
    "build_counterexample",
    "verify_blocks",
    "default_a_schedule",
]


def default_a_schedule(j: int) -> float:
    return float(j + 2)


@dataclass(frozen=True)
class BlockRecord:
    """Parameters of one construction block, logs carried explicitly.

    A_i overflows the linear range after a few blocks; ``log_A`` is
    authoritative and ``A`` is ``exp(log_A)`` or ``inf``.  ``p_next`` is the
    first index of the following block when it is representable as an
    integer; the outer run of the last block extends to it.
    """

    i: int
    p: int
    q: int
    a: float
    b: float
    C: float
    A: float
    log_A: float
    log_C: float
    log_nu_inner: float
    log_nu_outer: float
    p_next: Optional[int]


@dataclass(frozen=True)
class BuildResult:
    sequence: WeightSequence
    blocks: tuple[BlockRecord, ...]
    requested: int
    halted: bool
    halt_reason: str
    materialized_horizon: int


# One constant-quotient stretch of the constructed sequence.
@dataclass(frozen=True)
class _Run:
    lo: int          # first quotient index of the run
    hi: int          # last quotient index (inclusive); may be astronomical
    log_nu: float


def _runs_from_blocks(p1: int, blocks: Sequence[BlockRecord]) -> list[_Run]:
    runs = [_Run(1, p1, 0.0)]
    for blk in blocks:
        runs.append(_Run(blk.p + 1, blk.q, blk.log_nu_inner))
        if blk.p_next is not None:
            runs.append(_Run(blk.q + 1, blk.p_next, blk.log_nu_outer))
    return runs


def _capped_runs(runs: Sequence[_Run], horizon: int) -> list[_Run]:
    capped = []
    for run in runs:
        if run.lo > horizon:
            break
        capped.append(_Run(run.lo, min(run.hi, horizon), run.log_nu))
    return capped


def _suffix_inverse_sum(runs: Sequence[_Run], start: int) -> float:
    """Sum of 1/nu_k over recorded k ≥ start."""
    total = 0.0
    for run in runs:
        if run.hi < start:
            continue
        count = run.hi - max(run.lo, start) + 1
        if count > 1e15:
            total += math.exp(math.log(float(count)) - run.log_nu)
        else:
            total += count * math.exp(-run.log_nu)
    return total


def _log_term_at(runs: Sequence[_Run], j: int) -> float:
    """log N_j = sum of log quotients for indices ≤ j."""
    total = 0.0
    for run in runs:
        if run.lo > j:
            break
        count = min(run.hi, j) - run.lo + 1
        total += count * run.log_nu
    return total


def _log_optimal_enclosure(runs: Sequence[_Run], p: int, log_T: Interval) -> Interval:
    """Enclosure of log L_p = min over 0 ≤ j < p of (p-j) log(p/T_p) + log N_j.

    Within one constant run the candidate value is linear in j, so the
    minimum over all j < p is attained at a run endpoint; only endpoints
    are evaluated.
    """
    candidates = {0, p - 1}
    for run in runs:
        for j in (run.lo - 1, run.hi):
            if 0 <= j < p:
                candidates.add(j)
    slope_hi = math.log(p) - log_T.lo   # larger slope -> larger L
    slope_lo = math.log(p) - log_T.hi
    best_lo = math.inf
    best_hi = math.inf
    for j in sorted(candidates):
        log_nj = _log_term_at(runs, j)
        best_lo = min(best_lo, (p - j) * slope_lo + log_nj)
        best_hi = min(best_hi, (p - j) * slope_hi + log_nj)
    return Interval(best_lo, best_hi)


def _log_sub_exp(x: float, y: float) -> float:
    """log(e^x - e^y) for x > y."""
    return x + math.log1p(-math.exp(y - x))


def _basic_c_floor_log(p1: int, q1: int) -> float:
    """Log of the smallest admissible C_1:
    (p1!)^{(q1-p1)/(p1 q1)} / ((p1+1)...q1)^{1/q1}."""
    lf_p = log_factorial(p1)
    lf_q = log_factorial(q1)
    return (q1 - p1) / (p1 * q1) * lf_p - (lf_q - lf_p) / q1


def _recurrence_c_floor_log(prev: BlockRecord, log_n_prev_p: float,
                            p: int, q: int, log_n_p: float) -> float:
    """Log of the smallest admissible C_{i+1} given block i and the new
    indices: C_i^{q_i(q-p)/(q(q_i-p_i))} times
    (a_i * R * 2^{i+2} * (q-p)/(p-2))^{(q-p)/q}, where R compares the
    little-m roots at the two anchor indices."""
    exponent = prev.q * (q - p) / (q * (prev.q - prev.p))
    factor_pow = (q - p) / q
    bracket = (
        math.log(prev.a)
        + log_factorial(p) / p
        + log_n_prev_p / prev.p
        - log_factorial(prev.p) / prev.p
        - log_n_p / p
        + (prev.i + 2) * math.log(2.0)
        + math.log((q - p) / (p - 2))
    )
    return exponent * prev.log_C + factor_pow * bracket


def _inner_log_nu(log_C: float, p: int, q: int, log_n_p: float) -> float:
    """Log of the inner-run quotient value:
    C^{q/(q-p)} * (N_p/p!)^{1/p} * ((p+1)...q)^{1/(q-p)}."""
    lf_p = log_factorial(p)
    lf_q = log_factorial(q)
    return (q / (q - p)) * log_C + (log_n_p - lf_p) / p + (lf_q - lf_p) / (q - p)


def _scan_p_next(a: float, log_A: float, q: int) -> Optional[int]:
    """Minimal p_next with (p_next - q)/nu_{q+1} > (A q - 1)/nu_q, i.e.
    p_next - q > a (A q - 1).  None when the value cannot be carried as an
    integer (its log exceeds the exponentiable range)."""
    log_Aq = log_A + math.log(q)
    if log_Aq <= 0.0:
        # A q ≤ 1: the right side is ≤ 0, one outer index suffices.
        return q + 1
    log_rhs = math.log(a) + _log_sub_exp(log_Aq, 0.0)
    if log_rhs > LINEAR_SCAN_CAP:
        return None
    return q + math.floor(math.exp(log_rhs)) + 1


def build_counterexample(
    num_blocks: int,
    a_schedule: Optional[Callable[[int], float]] = None,
    b_schedule: Optional[Callable[[int], float]] = None,
    seed: tuple[int, int] = (3, 5),
    max_index: int = DEFAULT_MAX_INDEX,
) -> BuildResult:
    """Run the block recurrences and materialize the quotient prefix.

    With ``b_schedule`` omitted, A_1 = DEFAULT_A1 and later A_i sit at half
    the largest value whose induced outer run still meets the alpha/beta
    target, with b_i derived from A_i = (C_i b_i)^{q_i}; block growth is
    floored at p_{i+1} ≥ 2 q_i + 2 so the next block admits A ≥ 1.  An
    explicit ``b_schedule`` is honored literally.

    Raises OverflowHalt carrying the partial result once any log-domain
    quantity leaves the representable range or a next index cannot be
    seated as an integer.
    """
    if num_blocks < 2:
        raise ScheduleInvalid("num_blocks must be at least 2")
    p1, q1 = seed
    if not (isinstance(p1, int) and isinstance(q1, int)):
        raise ScheduleInvalid("seed indices must be integers")
    if p1 <= 2:
        raise ScheduleInvalid("seed requires p1 > 2")
    if q1 < 2 * p1 - 1:
        raise ScheduleInvalid("seed requires q1 >= 2 p1 - 1")
    if max_index < q1:
        raise ScheduleInvalid("max_index too small to hold the seed block")
    sched_a = a_schedule if a_schedule is not None else default_a_schedule
    adaptive = b_schedule is None

    blocks: list[BlockRecord] = []
    halted = False
    halt_reason = ""

    p, q = p1, q1
    log_C = _basic_c_floor_log(p1, q1) + math.log1p(SLACK)
    log_n_p = 0.0                      # log N_{p_i}; N is 1 through p1
    prev_a = None
    entering = 0.0                     # log quotient on the run arriving at p_i

    for i in range(1, num_blocks + 1):
        a = float(sched_a(i))
        if not math.isfinite(a) or a <= 1.0:
            raise ScheduleInvalid(f"a-schedule must exceed 1 (block {i})")
        if prev_a is not None and a <= prev_a:
            raise ScheduleInvalid(f"a-schedule must be strictly increasing (block {i})")
        prev_a = a

        log_inner = _inner_log_nu(log_C, p, q, log_n_p)
        if not math.isfinite(log_inner) or abs(log_inner) > LOG_CAP:
            halted, halt_reason = True, f"inner quotient log overflow at block {i}"
            break
        log_outer = log_inner + math.log(a)

        if adaptive:
            if i == 1:
                A = DEFAULT_A1
                log_A = math.log(A)
            else:
                cap = ((p - 2) * 2.0 ** (-(i + 1)) * math.exp(log_inner - entering)
                       + 1.0) / q
                A = 0.5 * cap
                log_A = math.log(A)
            log_b = log_A / q - log_C
            b = math.exp(log_b)
        else:
            b = float(b_schedule(i))
            if not math.isfinite(b) or b <= 0.0:
                raise ScheduleInvalid(f"b-schedule must be positive (block {i})")
            log_A = q * (log_C + math.log(b))
            A = math.exp(log_A) if log_A < 700.0 else math.inf
        if not math.isfinite(log_A) or abs(log_A) > LOG_CAP:
            halted, halt_reason = True, f"log A overflow at block {i}"
            break

        p_next = _scan_p_next(a, log_A, q)
        if adaptive and p_next is not None:
            p_next = max(p_next, 2 * q + 2)
        blocks.append(BlockRecord(i, p, q, a, b, math.exp(log_C), A, log_A,
                                  log_C, log_inner, log_outer, p_next))
        if i == num_blocks:
            break
        if p_next is None:
            halted, halt_reason = True, f"cannot seat block {i + 1}: index overflow"
            break

        q_next = 2 * p_next - 1
        log_n_q = log_n_p + (q - p) * log_inner
        log_n_p_next = log_n_q + float(p_next - q) * log_outer
        if not math.isfinite(log_n_p_next) or abs(log_n_p_next) > LOG_CAP:
            halted, halt_reason = True, f"log N overflow entering block {i + 1}"
            break
        log_C_next = _recurrence_c_floor_log(blocks[-1], log_n_p, p_next, q_next,
                                             log_n_p_next) + math.log1p(SLACK)
        if not math.isfinite(log_C_next) or abs(log_C_next) > LOG_CAP:
            halted, halt_reason = True, f"log C overflow entering block {i + 1}"
            break
        entering = log_outer
        p, q = p_next, q_next
        log_C = log_C_next
        log_n_p = log_n_p_next

    result = _finalize(p1, blocks, num_blocks, halted, halt_reason, max_index)
    if halted:
        raise OverflowHalt(halt_reason, partial=result)
    return result


def _finalize(p1: int, blocks: list[BlockRecord], requested: int,
              halted: bool, halt_reason: str, max_index: int) -> BuildResult:
    runs = _runs_from_blocks(p1, blocks)
    horizon = p1
    for run in runs:
        if run.hi <= max_index:
            horizon = max(horizon, run.hi)
        else:
            break
    lq = np.zeros(horizon, dtype=float)
    for run in runs:
        if run.lo > horizon:
            break
        hi = min(run.hi, horizon)
        lq[run.lo - 1:hi] = run.log_nu
    label = f"counterexample(blocks={len(blocks)})"
    seq = _from_quotients_unchecked(lq, Unknown, label)
    return BuildResult(seq, tuple(blocks), requested, halted, halt_reason, horizon)


# ---------------------------------------------------------------------------
# Verification

# Failure precedence: earlier entries name the reported requirement when a
# tampered input breaks several checks at once.
_CHECK_ORDER = (
    "qipirequirement",
    "block ordering",
    "sequencecrequirebasic",
    "sequencecrequire",
    "ansatzpiqi",
    "log-convexity junction",
    "log-convexity prefix",
    "requirement (I)",
    "requirement (II)",
    "alphabetaverify (alpha)",
    "alphabetaverify (beta)",
)


@dataclass(frozen=True)
class BlockCheck:
    i: int
    c_floor_log: float             # smallest admissible log C_i
    profile_I: Optional[Interval]  # gamma1 profile at p_i; hi is conditional
    profile_I_required: bool
    profile_II: Optional[float]    # certified lower bound at q_i, if checkable
    ansatz_rel_err: float
    junction_ok: bool
    alpha: float
    beta: Optional[float]
    alpha_target_ok: Optional[bool]
    beta_target_ok: Optional[bool]
    v_p: Optional[Interval]        # (log L - p log p)/p at p_i
    v_q: Optional[Interval]
    d_p: Optional[Interval]        # (log N - log L)/p at p_i
    d_q: Optional[Interval]
    d_excess_lo: Optional[float]   # certified d(q_i) - d(p_i)
    drop_lo: Optional[float]       # certified v(p_i) - v(q_i)
    log_ratio: float               # log(A_i^{1/q_i} / C_i)
    A_at_least_one: bool


@dataclass(frozen=True)
class VerifyReport:
    blocks: tuple[BlockCheck, ...]
    defect_through_block: tuple[Optional[Interval], ...]
    continuation_rest: float
    notes: tuple[str, ...]


class _Failures:
    def __init__(self) -> None:
        self.items: list[tuple[int, str]] = []

    def add(self, block: int, which: str) -> None:
        self.items.append((block, which))

    def raise_if_any(self) -> None:
        if not self.items:
            return
        self.items.sort(key=lambda it: (_CHECK_ORDER.index(it[1]), it[0]))
        block, which = self.items[0]
        raise VerificationFailed(f"block {block}: {which} violated",
                                 block=block, which=which)


def verify_blocks(sequence: WeightSequence, blocks: Sequence[BlockRecord],
                  seed_p1: Optional[int] = None) -> VerifyReport:
    """Re-derive every inequality the construction requires.

    All sums are explicit finite sums over the materialized range; beyond it
    the quotients are only known not to decrease, which lower-bounds nothing
    summable, so requirement (II) on a block whose outer run is not
    materialized falls back to a tail-certified profile bound when the
    sequence carries a tail model and is otherwise skipped with a note.
    Raises VerificationFailed naming the first failed requirement in
    precedence order; observations that are not requirements go to notes.
    """
    if not blocks:
        raise VerificationFailed("no blocks to verify", block=0, which="empty")
    blocks = sorted(blocks, key=lambda blk: blk.i)
    p1 = seed_p1 if seed_p1 is not None else blocks[0].p
    horizon = sequence.horizon
    notes: list[str] = []
    failures = _Failures()

    # Structural index requirements and block chaining.
    for blk in blocks:
        if blk.p <= 2 or blk.q < 2 * blk.p - 1:
            failures.add(blk.i, "qipirequirement")
        if blk.p_next is not None and blk.p_next <= blk.q:
            failures.add(blk.i, "block ordering")
    entering = {blocks[0].i: 0.0}
    for prev, blk in zip(blocks, blocks[1:]):
        entering[blk.i] = prev.log_nu_outer
        if prev.p_next is None or prev.p_next != blk.p:
            failures.add(blk.i, "block ordering")
    failures.raise_if_any()

    # log N at the anchor indices, from the recorded runs.
    log_n_at_p = {blocks[0].i: 0.0}
    log_n_at_q = {}
    for idx, blk in enumerate(blocks):
        log_n_at_q[blk.i] = log_n_at_p[blk.i] + (blk.q - blk.p) * blk.log_nu_inner
        if idx + 1 < len(blocks):
            nxt = blocks[idx + 1]
            log_n_at_p[nxt.i] = log_n_at_q[blk.i] \
                + float(nxt.p - blk.q) * blk.log_nu_outer

    # C floors, ansatz equality, junction monotonicity.
    c_floors = {}
    first = blocks[0]
    c_floors[first.i] = _basic_c_floor_log(first.p, first.q)
    if first.log_C < c_floors[first.i] - 1e-12:
        failures.add(first.i, "sequencecrequirebasic")
    for prev, blk in zip(blocks, blocks[1:]):
        c_floors[blk.i] = _recurrence_c_floor_log(
            prev, log_n_at_p[prev.i], blk.p, blk.q, log_n_at_p[blk.i])
        if blk.log_C < c_floors[blk.i] - 1e-12:
            failures.add(blk.i, "sequencecrequire")

    ansatz_err = {}
    for blk in blocks:
        lhs = log_n_at_q[blk.i] - log_factorial(blk.q)
        rhs = (blk.q / blk.p) * (log_n_at_p[blk.i] - log_factorial(blk.p)) \
            + blk.q * blk.log_C
        err = abs(lhs - rhs) / max(1.0, abs(lhs))
        ansatz_err[blk.i] = err
        if err > ANSATZ_RTOL:
            failures.add(blk.i, "ansatzpiqi")

    junction = {}
    for blk in blocks:
        ok = blk.log_nu_inner >= entering[blk.i] - 1e-12
        ok = ok and blk.log_nu_outer >= blk.log_nu_inner - 1e-12
        junction[blk.i] = ok
        if not ok:
            failures.add(blk.i, "log-convexity junction")
    lq = sequence.log_quotients
    if lq.size and (np.diff(lq) < -1e-12).any():
        failures.add(0, "log-convexity prefix")
    failures.raise_if_any()

    # Materialized prefix against the recorded runs (observational).
    runs = _runs_from_blocks(p1, blocks)
    capped = _capped_runs(runs, horizon)
    if lq.size >= p1 and not np.all(lq[:p1] == 0.0):
        notes.append("materialized seed quotients differ from 1")
    for run in capped:
        seg = lq[run.lo - 1:run.hi]
        if seg.size and np.max(np.abs(seg - run.log_nu)) > 1e-12:
            notes.append(f"materialized quotients deviate from recorded run at {run.lo}")
            break

    # Alpha/beta targets, anchors i ≥ 2; beta needs the outer extent.
    # Deep-block quotient logs reach magnitudes where the linear values
    # underflow, so the comparisons are carried out on logs.
    log_target = {blk.i: math.log(blk.p - 2) - entering[blk.i]
                  for blk in blocks if blk.i >= 2}
    outer_known = {blk.i: blk.p_next is not None and blk.p_next <= horizon
                   for blk in blocks}
    alpha = {}
    log_alpha = {}
    beta = {}
    log_beta = {}
    for blk in blocks:
        log_alpha[blk.i] = math.log(blk.q - blk.p) - blk.log_nu_inner
        alpha[blk.i] = math.exp(log_alpha[blk.i])
        if outer_known[blk.i]:
            log_beta[blk.i] = math.log(blk.p_next - blk.q) - blk.log_nu_outer
            beta[blk.i] = math.exp(log_beta[blk.i])
    alpha_ok = {}
    beta_ok = {}
    for blk in blocks:
        k = blk.i
        scales = [-(k + 1) * math.log(2.0) + log_target[i]
                  for i in log_target if i <= k]
        if k < 2 or not scales:
            alpha_ok[k] = None
            beta_ok[k] = None
            continue
        log_bound = min(scales)
        alpha_ok[k] = log_alpha[k] < log_bound
        if not alpha_ok[k]:
            failures.add(k, "alphabetaverify (alpha)")
        if k in log_beta:
            beta_ok[k] = log_beta[k] < log_bound
            if not beta_ok[k]:
                failures.add(k, "alphabetaverify (beta)")
        else:
            beta_ok[k] = None
            notes.append(f"beta target unchecked for block {k}: outer extent "
                         "not materialized")

    # Continuation allowance for unbuilt blocks, from the same targets.
    n = blocks[-1].i
    if 2 in log_target:
        t2 = math.exp(log_target[2])
        rest = t2 * 2.0 ** (-n)
        if not outer_known[n]:
            rest += t2 * 2.0 ** (-(n + 1))
    else:
        rest = math.inf
        notes.append("no block-2 target scale; upper enclosures are open")

    # Requirement profiles over the materialized range.
    prof_I = {}
    prof_II = {}
    for blk in blocks:
        if blk.p > horizon:
            prof_I[blk.i] = None
            prof_II[blk.i] = None
            notes.append(f"block {blk.i} beyond the materialized range; "
                         "profiles unchecked")
            continue
        sum_from_p = _suffix_inverse_sum(capped, blk.p)
        nu_p = math.exp(entering[blk.i])
        lo = nu_p / blk.p * sum_from_p
        hi = lo + (nu_p / blk.p * rest if math.isfinite(rest) else math.inf)
        prof_I[blk.i] = Interval(lo, hi) if math.isfinite(hi) else Interval(lo, math.inf)
        if blk.i >= 2 and lo >= 1.0:
            failures.add(blk.i, "requirement (I)")

        if outer_known[blk.i] and blk.q <= horizon:
            sum_after_q = _suffix_inverse_sum(capped, blk.q + 1)
            value = 1.0 / blk.q + math.exp(blk.log_nu_inner) / blk.q * sum_after_q
            prof_II[blk.i] = value
        else:
            prof_II[blk.i] = _tail_profile_lower(sequence, blk.q)
            if prof_II[blk.i] is None:
                notes.append(f"requirement (II) unchecked for block {blk.i}: "
                             "outer extent not materialized")
        if prof_II[blk.i] is not None:
            bound_A = math.exp(blk.log_A) if blk.log_A < 700.0 else math.inf
            if not prof_II[blk.i] > bound_A:
                failures.add(blk.i, "requirement (II)")
    failures.raise_if_any()

    # Payload: optimal-sequence violation and defect enclosures per block.
    checks: list[BlockCheck] = []
    v_intervals: list[Optional[Interval]] = []
    for blk in blocks:
        in_range = blk.q <= horizon
        if in_range:
            v_p, d_p = _v_d_enclosure(capped, blk.p, rest)
            v_q, d_q = _v_d_enclosure(capped, blk.q, rest)
            d_excess = d_q.lo - d_p.hi
            drop = v_p.lo - v_q.hi
        else:
            v_p = v_q = d_p = d_q = None
            d_excess = None
            drop = None
        v_intervals.extend([v_p, v_q])
        checks.append(BlockCheck(
            i=blk.i,
            c_floor_log=c_floors[blk.i],
            profile_I=prof_I[blk.i],
            profile_I_required=blk.i >= 2,
            profile_II=prof_II[blk.i],
            ansatz_rel_err=ansatz_err[blk.i],
            junction_ok=junction[blk.i],
            alpha=alpha[blk.i],
            beta=beta.get(blk.i),
            alpha_target_ok=alpha_ok[blk.i],
            beta_target_ok=beta_ok[blk.i],
            v_p=v_p, v_q=v_q, d_p=d_p, d_q=d_q,
            d_excess_lo=d_excess,
            drop_lo=drop,
            log_ratio=blk.log_A / blk.q - blk.log_C,
            A_at_least_one=blk.log_A >= 0.0,
        ))

    defects: list[Optional[Interval]] = []
    for idx in range(len(blocks)):
        window = v_intervals[:2 * (idx + 1)]
        if any(iv is None for iv in window):
            defects.append(None)
            continue
        lo = 0.0
        hi = 0.0
        for a_idx in range(len(window)):
            for b_idx in range(a_idx + 1, len(window)):
                lo = max(lo, window[a_idx].lo - window[b_idx].hi)
                hi = max(hi, window[a_idx].hi - window[b_idx].lo)
        defects.append(Interval(lo, hi))

    if not all(chk.A_at_least_one for chk in checks if chk.i >= 2):
        notes.append("A_i < 1 at some block beyond the first")
    ratios = [chk.log_ratio for chk in checks]
    if any(later <= earlier for earlier, later in zip(ratios, ratios[1:])):
        notes.append("log(A^{1/q}/C) not strictly increasing across blocks")
    if not all(blk.p_next is None or (blk.p_next - 2) < blk.a * (blk.q - blk.p)
               for blk in blocks):
        notes.append("airequirement fails as displayed; the alpha/beta targets "
                     "are the operative bound")

    return VerifyReport(tuple(checks), tuple(defects),
                        rest, tuple(notes))


def _tail_profile_lower(sequence: WeightSequence, q: int) -> Optional[float]:
    if sequence.tail is Unknown or q > sequence.horizon:
        return None
    from .tails import gamma1_profile
    try:
        return gamma1_profile(sequence, q).lo
    except Exception:
        return None


def _v_d_enclosure(runs: Sequence[_Run], p: int, rest: float) -> tuple[Interval, Interval]:
    """Enclosures of (log L_p - p log p)/p and (log N_p - log L_p)/p.

    With an infinite continuation allowance the upper tail end is unknown;
    the enclosure then degenerates to the materialized value.
    """
    t_lo = _suffix_inverse_sum(runs, p)
    t_hi = t_lo + rest if math.isfinite(rest) else t_lo
    log_T = Interval(math.log(t_lo), math.log(t_hi))
    log_L = _log_optimal_enclosure(runs, p, log_T)
    log_n = _log_term_at(runs, p)
    lp = math.log(p)
    v = Interval(log_L.lo / p - lp, log_L.hi / p - lp)
    d = Interval((log_n - log_L.hi) / p, (log_n - log_L.lo) / p)
    return v, d
