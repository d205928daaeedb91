"""Associated weight functions and derived integral quantities.

The weight of a sequence is omega(t) = sup_p (p log t - log M_p), zero for
t <= 1 on normalized sequences.  For log-convex input the supremum is located
by the quotients (the maximizer is the last index whose quotient is below t),
which extends past the horizon through the tail model.  Without a usable
model the evaluation window is the stored range and arguments beyond the
largest stored quotient are refused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import (
    NotLogConvex,
    OverflowHalt,
    RemainderUnbounded,
    TailRequired,
    TailUnknown,
    TruncationTooSmall,
)
from .intervals import Interval, Verdict, fails, holds, inconclusive
from .sequences import (
    PowerTail,
    RatioTail,
    UnknownTail,
    WeightSequence,
    is_log_convex,
)

_EXHAUSTIVE_CHECK_HORIZON = 64


def _maximizer_from_model(M: WeightSequence, lnt: float) -> int:
    """Largest p with log mu_p <= lnt when that p lies past the horizon."""
    tail = M.tail
    H = M.horizon
    if isinstance(tail, PowerTail):
        if tail.s == 0.0:
            raise TailRequired("constant quotients never pass the argument")
        p = int(math.floor(math.exp((lnt - math.log(tail.c)) / tail.s)))
        p = max(p, H)
    elif isinstance(tail, RatioTail):
        lnq = math.log(tail.q)
        p = H + int(math.floor((lnt - float(M.log_quotients[-1])) / lnq))
        p = max(p, H)
    else:
        raise TailRequired("argument beyond the stored quotients")
    # settle float edges against the model itself
    while M.log_quotient(p + 1) <= lnt:
        p += 1
    while p > 1 and M.log_quotient(p) > lnt:
        p -= 1
    return p


def omega(M: WeightSequence, t: float) -> float:
    """sup_p (p log t - log M_p)."""
    if not (math.isfinite(t) and t > 0.0):
        raise ValueError("weight argument must be positive and finite")
    lnt = math.log(t)
    lq = M.log_quotients
    H = M.horizon
    normalized = lq[0] >= -1e-12
    if normalized and lnt <= 0.0:
        return 0.0
    if is_log_convex(M) and not isinstance(M.tail, UnknownTail):
        if lnt < float(lq[-1]):
            p = int(np.searchsorted(lq, lnt, side="right"))
        else:
            p = _maximizer_from_model(M, lnt)
        val = p * lnt - M.log_term(p)
        if H <= _EXHAUSTIVE_CHECK_HORIZON and p <= H:
            direct = _omega_window(M, lnt)
            assert abs(val - direct) <= 1e-9 * max(1.0, abs(direct))
        return max(val, 0.0) if normalized else val
    if lnt >= float(np.max(lq)):
        raise TailRequired(
            "argument at or beyond the largest stored quotient with no "
            "usable tail model")
    return _omega_window(M, lnt)


def _omega_window(M: WeightSequence, lnt: float) -> float:
    """max over 0 <= p <= H of (p lnt - log M_p); no extension guard."""
    ps = np.arange(M.horizon + 1)
    return float(np.max(ps * lnt - M.log_terms()))


def recover_sequence(M: WeightSequence, p: int) -> float:
    """log of the p-th term recovered from the weight:
    sup_t (p log t - omega(t)).

    Equals log M_p when M is log-convex; in general it reproduces the lower
    convex envelope of the log terms.  The supremum is attained at a slope of
    that envelope, so evaluating at every chord slope of the stored log terms
    is exhaustive.
    """
    if not 0 <= p <= M.horizon:
        raise ValueError(f"index {p} outside 0..{M.horizon}")
    if p == 0:
        return 0.0
    cum = M.log_terms()
    H = M.horizon
    idx = np.arange(H + 1)
    diffs = cum[None, :] - cum[:, None]          # [j, k] = cum_k - cum_j
    steps = idx[None, :] - idx[:, None]
    ju, ku = np.triu_indices(H + 1, k=1)
    slopes = np.unique(diffs[ju, ku] / steps[ju, ku])
    best = -math.inf
    for chunk in np.array_split(slopes, max(1, slopes.size // 512)):
        vals = chunk[:, None] * idx[None, :] - cum[None, :]
        w = np.max(vals, axis=1)                 # omega at each slope
        best = max(best, float(np.max(p * chunk - w)))
    return max(best, 0.0)


def _p_star_bound(N: WeightSequence) -> Tuple[float, float]:
    """Coefficients (A, B) with maximizer index <= A + B log u for all
    u >= 1, from the tail model."""
    tail = N.tail
    H = N.horizon
    if isinstance(tail, PowerTail):
        # p*(u) <= (u/c)^{1/s}; handled separately as a power bound
        raise AssertionError("power tails use the closed power-form bound")
    if isinstance(tail, RatioTail):
        lnq = math.log(tail.q)
        ln_mu_H = float(N.log_quotients[-1])
        A = H + 1 + max(0.0, -ln_mu_H) / lnq
        return A, 1.0 / lnq
    raise RemainderUnbounded("tail model unknown")


def kappa(N: WeightSequence, t: float, y_max: float = 1.0e6,
          panels: int = 256) -> Interval:
    """Enclosure of the integral of omega_N(t y) / y^2 over y in [1, inf).

    The window [1, y_max] is bracketed by monotone panel bounds; past y_max
    the weight is dominated through the tail model (power model: maximizer
    index at most (u/c)^{1/s}; ratio model: index grows logarithmically).
    Raises RemainderUnbounded when the model cannot make the integral finite.
    """
    if not (math.isfinite(t) and t > 0.0):
        raise ValueError("argument must be positive and finite")
    if y_max <= 1.0 or panels < 1:
        raise ValueError("need y_max > 1 and at least one panel")
    tail = N.tail
    if isinstance(tail, UnknownTail):
        raise RemainderUnbounded("tail model unknown")
    if isinstance(tail, PowerTail) and tail.s <= 1.0:
        raise RemainderUnbounded(
            "power tail with exponent <= 1 makes the integral diverge")
    edges = np.exp(np.linspace(0.0, math.log(y_max), panels + 1))
    w = np.array([omega(N, t * y) for y in edges])
    inv = 1.0 / edges
    seg = inv[:-1] - inv[1:]
    finite_lo = float(np.dot(w[:-1], seg))
    finite_hi = float(np.dot(w[1:], seg))
    Y = y_max
    lo_rem = w[-1] / Y
    # slack for non-normalized input: omega(u) <= p*(u) log u + D0
    D0 = max(0.0, -float(np.min(N.log_terms())))
    L = math.log(t)
    if isinstance(tail, PowerTail):
        s, c = tail.s, tail.c
        beta = 1.0 / s - 1.0
        amp = (t / c) ** (1.0 / s)
        Yb = Y ** beta
        hi_rem = amp * (L * Yb / (-beta) + Yb * (1.0 - beta * math.log(Y)) / beta ** 2)
        hi_rem += D0 / Y
    else:
        A, B = _p_star_bound(N)
        lnY = math.log(Y)
        c0 = A * L + B * L * L + D0
        c1 = A + 2.0 * B * L
        c2 = B
        hi_rem = (c0 + c1 * (lnY + 1.0) + c2 * (lnY * lnY + 2.0 * lnY + 2.0)) / Y
    return Interval(finite_lo + lo_rem, finite_hi + hi_rem)


def default_t_grid(W: WeightSequence, per_decade: int = 64) -> np.ndarray:
    """Log-spaced arguments from 1 to the last stored quotient."""
    ln_hi = float(W.log_quotients[-1])
    if ln_hi <= 0.0:
        return np.array([1.0])
    n = max(2, int(math.ceil(per_decade * ln_hi / math.log(10.0))) + 1)
    return np.exp(np.linspace(0.0, ln_hi, n))


def _growth_index(tail) -> Optional[float]:
    if isinstance(tail, PowerTail):
        if tail.s <= 1.0:
            return None
        return 1.0 / tail.s
    if isinstance(tail, RatioTail):
        return 0.0
    return None


@dataclass(frozen=True)
class WeightPairReport:
    """Pointwise report for the weight pair condition
    kappa_N(t) <= C (omega_M(t) + 1)."""

    name: str
    t_grid: np.ndarray
    profile: Tuple[Interval, ...]
    running_sup: Interval
    verdict: Verdict
    witnesses: Tuple[float, ...] = ()


def check_snq(M: WeightSequence, N: WeightSequence,
              t_grid: Optional[np.ndarray] = None,
              y_max: float = 1.0e6) -> WeightPairReport:
    """Ratio kappa_N(t) / (omega_M(t) + 1) over a grid of arguments.

    The verdict compares the growth indices certified by the two tail
    models; the grid data alone never upgrades it past Inconclusive.
    """
    if t_grid is None:
        t_grid = default_t_grid(N)
    t_grid = np.asarray(t_grid, dtype=np.float64)
    profile = []
    for t in t_grid:
        k = kappa(N, float(t), y_max=y_max)
        denom = omega(M, float(t)) + 1.0
        profile.append(Interval(k.lo / denom, k.hi / denom))
    profile = tuple(profile)
    sup_lo = max(iv.lo for iv in profile)
    sup_hi = max(iv.hi for iv in profile)
    sup = Interval(sup_lo, sup_hi)
    arg = float(t_grid[int(np.argmax([iv.hi for iv in profile]))])
    gN = _growth_index(N.tail)
    gM = _growth_index(M.tail)
    if gN is None or gM is None:
        verdict = inconclusive("tail models do not certify growth",
                               bound=sup)
    elif gN <= gM:
        verdict = holds(bound=sup,
                        reason="weight growth index of the target does not "
                               "exceed the source index")
    else:
        verdict = fails(reason="target weight grows strictly faster than "
                               "the source weight")
    return WeightPairReport("snq-weights", t_grid, profile, sup, verdict,
                            (arg,))


def theta_jet(N: WeightSequence, j: int, K: int) -> Interval:
    """Enclosure of log s_j for the jet s_j = sum_k N_k (2 nu_k)^{j-k}.

    The sum is cut at K; past the first j terms consecutive summands decay at
    least geometrically with ratio 1/2 (log-convexity), so the truncated part
    is at most the last kept term.  The enclosure is returned in log scale:
    [log partial, log(partial + last term)].
    """
    if j < 0:
        raise ValueError("jet order must be nonnegative")
    if K < j:
        raise TruncationTooSmall(f"truncation {K} below jet order {j}")
    if isinstance(N.tail, UnknownTail) and K >= N.horizon:
        raise TailUnknown("remainder bound needs a tail model")
    if not is_log_convex(N):
        raise NotLogConvex("jet remainder bound needs nondecreasing "
                           "quotients")
    ln2 = math.log(2.0)
    lnt = np.empty(K + 1)
    for k in range(0, K + 1):
        lnnu = 0.0 if k == 0 else N.log_quotient(k)
        lnt[k] = N.log_term(k) + (j - k) * (ln2 + lnnu)
    m = float(np.max(lnt))
    if m > 700.0:
        raise OverflowHalt("jet value exceeds float range")
    scaled = np.exp(lnt - m)
    partial = float(np.sum(scaled))
    last = float(scaled[K])
    return Interval(m + math.log(partial), m + math.log(partial + last))
