"""Growth and regularity conditions for single sequences and pairs.

Each check returns a :class:`ConditionReport` carrying the per-index profile
as enclosures, the running sup over the computed range, and a three valued
verdict.  The verdict policy is conservative: Holds and Fails are only
returned when the tail models supply a certificate covering all indices past
the horizon; purely finite data yields Inconclusive together with the
observed sup, which is still useful as a candidate constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .intervals import Interval, TriState, Verdict, fails, holds, inconclusive
from .sequences import (
    PowerTail,
    RatioTail,
    WeightSequence,
    is_log_convex,
)
from .tails import _scaled_tail, gamma1_profile, is_nonquasianalytic

ProfileEntry = Tuple[int, Interval]


@dataclass(frozen=True)
class ConditionReport:
    name: str
    profile: Tuple[ProfileEntry, ...]
    running_sup: Interval
    verdict: Verdict
    witnesses: Tuple[int, ...] = ()
    notes: Tuple[Tuple[str, float], ...] = ()

    def profile_at(self, p: int) -> Interval:
        for q, iv in self.profile:
            if q == p:
                return iv
        raise KeyError(f"no profile entry at {p}")


def _running_sup(profile) -> Tuple[Interval, int]:
    lo = max(iv.lo for _, iv in profile)
    hi = max(iv.hi for _, iv in profile)
    arg = max(profile, key=lambda e: e[1].hi)[0]
    return Interval(lo, hi), arg


def check_gamma1(N: WeightSequence) -> ConditionReport:
    """Profile p -> (nu_p / p) T_p; bounded iff strong nonquasianalyticity."""
    profile = tuple((p, gamma1_profile(N, p)) for p in range(1, N.horizon + 1))
    sup, arg = _running_sup(profile)
    H = N.horizon
    tail = N.tail
    if isinstance(tail, PowerTail):
        if tail.s > 1.0:
            # past the horizon the model is exact: value in
            # [1/(s-1), 1/(s-1) + 1/p] for every p > H
            beyond = Interval(1.0 / (tail.s - 1.0),
                              1.0 / (tail.s - 1.0) + 1.0 / (H + 1))
            bound = Interval(max(sup.lo, beyond.lo), max(sup.hi, beyond.hi))
            verdict = holds(bound=bound)
        else:
            verdict = fails(witness=1,
                            reason="tail sum diverges for every start index")
    elif isinstance(tail, RatioTail):
        beyond_hi = tail.q / ((tail.q - 1.0) * (H + 1))
        bound = Interval(sup.lo, max(sup.hi, beyond_hi))
        verdict = holds(bound=bound)
    else:
        verdict = inconclusive("tail model unknown", bound=sup)
    return ConditionReport("gamma1", profile, sup, verdict, (arg,))


def check_mg(M: WeightSequence) -> ConditionReport:
    """Quotient doubling: profile p -> log(mu_{2p} / mu_p), p with 2p <= H.

    The quotient characterization assumes log-convexity; without it the
    profile is still reported but the verdict stays Inconclusive.  The notes
    carry the largest gap between log quotients and log roots, a companion
    boundedness indicator.
    """
    lq = M.log_quotients
    H = M.horizon
    profile = tuple(
        (p, Interval.point(float(lq[2 * p - 1] - lq[p - 1])))
        for p in range(1, H // 2 + 1))
    if not profile:
        raise ValueError("horizon too small for any doubled index")
    sup, arg = _running_sup(profile)
    roots = np.array([M.log_root(p) for p in range(1, H + 1)])
    gap = float(np.max(lq - roots))
    notes = (("roots_quotient_gap_sup", gap),)
    lc = is_log_convex(M)
    tail = M.tail
    if not lc:
        verdict = inconclusive(
            "not log-convex; quotient ratios do not characterize the "
            "condition", bound=sup)
    elif isinstance(tail, PowerTail):
        model = tail.s * math.log(2.0)
        bound = Interval(min(sup.lo, model), max(sup.hi, model))
        verdict = holds(bound=bound)
    elif isinstance(tail, RatioTail):
        # mu_{2p}/mu_p >= q^p past the horizon, unbounded
        verdict = fails(witness=H,
                        reason="ratio tail forces unbounded quotient doubling")
    else:
        verdict = inconclusive("tail model unknown", bound=sup)
    return ConditionReport("mg", profile, sup, verdict, (arg,), notes)


def lambda_ps(M: WeightSequence, N: WeightSequence, p: int, s: int) -> float:
    """log lambda_{p,s} = max over 0 <= j < p of
    (log M_p - p log s - log N_j) / (p - j)."""
    if p < 1:
        raise ValueError("index must be positive")
    if p > min(M.horizon, N.horizon):
        raise ValueError(f"index {p} past the common horizon")
    if s < 1:
        raise ValueError("shift parameter must be a positive integer")
    top = M.log_term(p) - p * math.log(s)
    Ncum = N.log_terms()
    js = np.arange(p)
    return float(np.max((top - Ncum[:p]) / (p - js)))


def _lambda_array(M: WeightSequence, N: WeightSequence, s: int,
                  P: int) -> np.ndarray:
    """lam[p] = log lambda_{p,s} for 1 <= p <= P (lam[0] unused)."""
    Mcum = M.log_terms()
    Ncum = N.log_terms()
    lns = math.log(s)
    lam = np.empty(P + 1)
    lam[0] = math.nan
    for p in range(1, P + 1):
        js = np.arange(p)
        lam[p] = np.max((Mcum[p] - p * lns - Ncum[:p]) / (p - js))
    return lam


def _lambda_array_monotone(M: WeightSequence, N: WeightSequence, s: int,
                           P: int) -> np.ndarray:
    """Shortcut using that the maximizing j is nondecreasing in p for
    log-convex data; kept for cross-checking against the exhaustive scan."""
    Mcum = M.log_terms()
    Ncum = N.log_terms()
    lns = math.log(s)
    lam = np.empty(P + 1)
    lam[0] = math.nan
    j0 = 0
    for p in range(1, P + 1):
        top = Mcum[p] - p * lns
        best = -math.inf
        bestj = j0
        for j in range(min(j0, p - 1), p):
            v = (top - Ncum[j]) / (p - j)
            if v >= best:
                best = v
                bestj = j
        lam[p] = best
        j0 = bestj
    return lam


def _log_term_gap_sup(M: WeightSequence, N: WeightSequence) -> float:
    """Upper bound for sup_p (log M_p - log N_p) over all p, or +inf.

    Requires equal horizons so that the region past the data is governed by
    the two tail models alone.
    """
    if M.horizon != N.horizon:
        return math.inf
    H = M.horizon
    data = float(np.max(M.log_terms() - N.log_terms()))
    tm, tn = M.tail, N.tail
    if not (isinstance(tm, PowerTail) and isinstance(tn, PowerTail)):
        return math.inf
    dc = math.log(tm.c) - math.log(tn.c)
    ds = tm.s - tn.s
    if ds > 0.0:
        return math.inf
    if ds == 0.0:
        if dc > 0.0:
            return math.inf
        return data
    # increments dc + ds log p vanish at log p = dc / (-ds); the continuous
    # maximum past H bounds the discrete one
    data_H = float(M.log_terms()[H] - N.log_terms()[H])
    p_star = math.exp(min(dc / (-ds), 700.0))
    p_top = max(float(H), p_star)
    gap_top = data_H + (p_top - H) * dc + ds * (math.lgamma(p_top + 1.0)
                                                - math.lgamma(H + 1.0))
    return max(data, gap_top)


def _log_quotient_gap_sup(M: WeightSequence, N: WeightSequence) -> float:
    """Upper bound for sup_p (log mu_p - log nu_p) over all p, or +inf."""
    if M.horizon != N.horizon:
        return math.inf
    data = float(np.max(M.log_quotients - N.log_quotients))
    tm, tn = M.tail, N.tail
    if not (isinstance(tm, PowerTail) and isinstance(tn, PowerTail)):
        return math.inf
    dc = math.log(tm.c) - math.log(tn.c)
    ds = tm.s - tn.s
    if ds > 0.0:
        return math.inf
    if ds == 0.0:
        return max(data, dc)
    # decreasing past the crossover; first model index dominates
    H = M.horizon
    return max(data, dc + ds * math.log(H + 1))


def _sv_profile(lam: np.ndarray, N: WeightSequence, r: float,
                P: int) -> Tuple[ProfileEntry, ...]:
    Nr = N if r == 1.0 else N.power(1.0 / r)
    out = []
    for p in range(1, P + 1):
        iv = _scaled_tail(Nr, lam[p] / r - math.log(p), p)
        out.append((p, iv))
    return tuple(out)


def _sv_verdict(M: WeightSequence, N: WeightSequence, r: float,
                sup: Interval, use_quotients: bool) -> Verdict:
    """Shared certificate logic for the mixed conditions.

    A certificate needs: the (possibly ramified) second sequence strongly
    nonquasianalytic with a bounded profile, plus termwise domination of M by
    N (terms for the lambda based checks, quotients for the mu based ones).
    """
    Nr = N if r == 1.0 else N.power(1.0 / r)
    nq = is_nonquasianalytic(Nr)
    if nq.state is TriState.FAILS:
        return fails(witness=1,
                     reason="reciprocal quotient sum of the target diverges")
    if nq.state is TriState.INCONCLUSIVE:
        return inconclusive("tail model unknown", bound=sup)
    g1 = check_gamma1(Nr)
    if g1.verdict.state is not TriState.HOLDS:
        return inconclusive("no strong nonquasianalyticity certificate "
                            "for the target", bound=sup)
    if use_quotients:
        C = _log_quotient_gap_sup(M, N)
    else:
        if not is_log_convex(N):
            return inconclusive("target not log-convex", bound=sup)
        C = _log_term_gap_sup(M, N)
    if not math.isfinite(C):
        return inconclusive("no termwise domination certificate", bound=sup)
    factor = math.exp(max(C, 0.0) / r)
    g1hi = g1.verdict.bound.hi
    bound = Interval(sup.lo, max(sup.hi, factor * g1hi))
    return holds(bound=bound)


def check_SV(M: WeightSequence, N: WeightSequence, s: int = 1) -> ConditionReport:
    """Profile p -> (lambda_{p,s} / p) T_p for the pair (M, N)."""
    P = min(M.horizon, N.horizon)
    lam = _lambda_array(M, N, s, P)
    profile = _sv_profile(lam, N, 1.0, P)
    sup, arg = _running_sup(profile)
    verdict = _sv_verdict(M, N, 1.0, sup, use_quotients=False)
    return ConditionReport(f"sv(s={s})", profile, sup, verdict, (arg,))


def check_mixed_gamma1(M: WeightSequence, N: WeightSequence) -> ConditionReport:
    """Profile p -> (mu_p / p) T^N_p, the mixed strong nonquasianalyticity."""
    P = min(M.horizon, N.horizon)
    profile = tuple(
        (p, _scaled_tail(N, float(M.log_quotients[p - 1]) - math.log(p), p))
        for p in range(1, P + 1))
    sup, arg = _running_sup(profile)
    verdict = _sv_verdict(M, N, 1.0, sup, use_quotients=True)
    return ConditionReport("mixed-gamma1", profile, sup, verdict, (arg,))


def check_SV_ramified(M: WeightSequence, N: WeightSequence, r: float,
                      s: int = 1) -> ConditionReport:
    """Profile p -> (lambda_{p,s}^{1/r} / p) sum_{k>=p} (1/nu_k)^{1/r}."""
    if not (math.isfinite(r) and r > 0.0):
        raise ValueError("ramification parameter must be positive")
    P = min(M.horizon, N.horizon)
    lam = _lambda_array(M, N, s, P)
    profile = _sv_profile(lam, N, r, P)
    sup, arg = _running_sup(profile)
    verdict = _sv_verdict(M, N, r, sup, use_quotients=False)
    return ConditionReport(f"sv-ramified(r={r:g},s={s})", profile, sup,
                           verdict, (arg,))


def check_mixed_gamma_r(M: WeightSequence, N: WeightSequence,
                        r: float) -> ConditionReport:
    """Profile p -> (mu_p^{1/r} / p) sum_{k>=p} (1/nu_k)^{1/r}."""
    if not (math.isfinite(r) and r > 0.0):
        raise ValueError("ramification parameter must be positive")
    P = min(M.horizon, N.horizon)
    Nr = N.power(1.0 / r)
    profile = tuple(
        (p, _scaled_tail(Nr, float(M.log_quotients[p - 1]) / r - math.log(p), p))
        for p in range(1, P + 1))
    sup, arg = _running_sup(profile)
    verdict = _sv_verdict(M, N, r, sup, use_quotients=True)
    return ConditionReport(f"mixed-gamma-r(r={r:g})", profile, sup, verdict,
                           (arg,))


@dataclass(frozen=True)
class PreceqResult:
    """Largest root-scale log gap sup_p (log M_p - log N_p)/p with its index."""

    defect: float
    argmax: int


def preceq_defect(M: WeightSequence, N: WeightSequence) -> PreceqResult:
    """Smallest log C such that M_p <= (e^logC)^p N_p over the common range."""
    P = min(M.horizon, N.horizon)
    ps = np.arange(1, P + 1)
    gaps = (M.log_terms()[1:P + 1] - N.log_terms()[1:P + 1]) / ps
    k = int(np.argmax(gaps))
    return PreceqResult(float(gaps[k]), int(ps[k]))


@dataclass(frozen=True)
class AlmostIncreasingResult:
    """Largest later drop max_{p <= q} (v_p - v_q); zero means nondecreasing
    up to the floor from the p = q pairs.  Indices are 1-based."""

    defect: float
    pair: Tuple[int, int]


def almost_increasing_defect(values) -> AlmostIncreasingResult:
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] == 0:
        raise ValueError("need a nonempty one dimensional array")
    if not np.all(np.isfinite(v)):
        raise ValueError("values must be finite")
    best = 0.0
    pair = (1, 1)
    run_max = -math.inf
    run_arg = 1
    for i, x in enumerate(v, start=1):
        if x > run_max:
            run_max = x
            run_arg = i
        drop = run_max - x
        if drop > best:
            best = drop
            pair = (run_arg, i)
    return AlmostIncreasingResult(float(best), pair)
