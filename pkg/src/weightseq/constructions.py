"""Constructions of comparison sequences from a given weight sequence.

Two optimal objects are built here.  The descendant has quotients
sigma_p = tau_1 p / tau_p with tau_p = p/nu_p + T_p; it is automatically
log-convex and normalized.  The minimizing sequence

    log L_p = p log s + min_j [ (p-j) (log(Cp) - log T_p) + log N_j ]

is the largest sequence whose pair profile against N stays bounded by
construction.  Both depend on the tail sums T_p, so both require a tail model
certifying nonquasianalyticity; enclosure midpoints (in log scale) are frozen
into the output sequences while the full enclosures are returned alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import (
    HorizonTooSmall,
    NotLogConvex,
    Quasianalytic,
    TailUnknown,
)
from .intervals import Interval, TriState
from .sequences import (
    Unknown,
    WeightSequence,
    _from_quotients_unchecked,
    is_log_convex,
)
from .tails import is_nonquasianalytic, tail_sum


def _require_lc_nq(N: WeightSequence, who: str) -> None:
    if not is_log_convex(N):
        raise NotLogConvex(f"{who} needs nondecreasing log quotients")
    nq = is_nonquasianalytic(N)
    if nq.state is TriState.FAILS:
        raise Quasianalytic(f"{who} needs a convergent reciprocal "
                            "quotient sum")
    if nq.state is TriState.INCONCLUSIVE:
        raise TailUnknown(f"{who} needs a tail model certifying "
                          "nonquasianalyticity")


def _tau_enclosures(N: WeightSequence) -> Tuple[Interval, ...]:
    """tau_p = p/nu_p + T_p for p = 1..H."""
    out = []
    for p in range(1, N.horizon + 1):
        head = p * math.exp(-float(N.log_quotients[p - 1]))
        out.append(tail_sum(N, p).shift(head))
    return tuple(out)


def _log_sigma_mid(tau: Tuple[Interval, ...]) -> np.ndarray:
    """Log-scale midpoints of sigma_p = tau_1 p / tau_p, p = 1..H."""
    t1 = tau[0]
    mids = np.empty(len(tau))
    for i, tp in enumerate(tau):
        p = i + 1
        lo = math.log(t1.lo) + math.log(p) - math.log(tp.hi)
        hi = math.log(t1.hi) + math.log(p) - math.log(tp.lo)
        mids[i] = 0.5 * (lo + hi)
    return mids


@dataclass(frozen=True)
class DescendantResult:
    sequence: WeightSequence
    tau: Tuple[Interval, ...]
    tau1: Interval


def descendant(N: WeightSequence) -> DescendantResult:
    """Sequence with quotients sigma_p = tau_1 p / tau_p.

    The quotients are nondecreasing and start at 1, so the result is
    normalized and log-convex by construction.
    """
    _require_lc_nq(N, "descendant")
    tau = _tau_enclosures(N)
    logq = _log_sigma_mid(tau)
    seq = _from_quotients_unchecked(logq, Unknown, "descendant")
    return DescendantResult(seq, tau, tau[0])


def modified_descendant(N: WeightSequence) -> WeightSequence:
    """Descendant trimmed to sit below the quotients of N.

    With C the smallest integer above sup_p sigma_p / nu_p, the quotients are
    kept at 1 until sigma first reaches C and divided by C from there on.
    The result is normalized, log-convex and termwise at most nu.
    """
    _require_lc_nq(N, "modified descendant")
    tau = _tau_enclosures(N)
    logsig = _log_sigma_mid(tau)
    lq = N.log_quotients
    # C from the enclosure's upper endpoints so sigma <= C nu is certain
    sup_ratio = 0.0
    for i, tp in enumerate(tau):
        p = i + 1
        hi = math.exp(math.log(tau[0].hi) + math.log(p) - math.log(tp.lo)
                      - float(lq[i]))
        sup_ratio = max(sup_ratio, hi)
    C = max(1, math.ceil(sup_ratio))
    lnC = math.log(C)
    crossing = np.nonzero(logsig >= lnC)[0]
    if crossing.size == 0 and C > 1:
        raise HorizonTooSmall(
            f"sigma never reaches C={C} within horizon {N.horizon}")
    p_C = int(crossing[0]) + 1 if crossing.size else 1
    logq = np.where(np.arange(1, N.horizon + 1) < p_C, 0.0, logsig - lnC)
    return _from_quotients_unchecked(
        logq, Unknown, f"modified-descendant(C={C},p_C={p_C})")


@dataclass(frozen=True)
class OptimalSequenceResult:
    sequence: WeightSequence
    argmin: np.ndarray
    s: int
    C: float


def optimal_sequence(N: WeightSequence, s: int = 1,
                     C: float = 1.0) -> OptimalSequenceResult:
    """The minimizing sequence for the pair profile against N.

    ``argmin[p]`` records the smallest index attaining the minimum at p
    (entry 0 is unused).  T_p enters through the log-scale midpoint of its
    enclosure.  The result is usually not normalized.
    """
    if s < 1 or int(s) != s:
        raise ValueError("shift parameter must be a positive integer")
    if C < 1.0:
        raise ValueError("profile allowance C must be at least 1")
    _require_lc_nq(N, "optimal sequence")
    H = N.horizon
    Ncum = N.log_terms()
    lns = math.log(s)
    lnC = math.log(C)
    logL = np.zeros(H + 1)
    argmin = np.zeros(H + 1, dtype=np.int64)
    for p in range(1, H + 1):
        T = tail_sum(N, p)
        lnT_mid = 0.5 * (math.log(T.lo) + math.log(T.hi))
        slope = lnC + math.log(p) - lnT_mid
        js = np.arange(p)
        vals = (p - js) * slope + Ncum[:p]
        j = int(np.argmin(vals))
        argmin[p] = j
        logL[p] = p * lns + float(vals[j])
    seq = _from_quotients_unchecked(np.diff(logL), Unknown,
                                    f"optimal(s={s},C={C:g})")
    return OptimalSequenceResult(seq, argmin, int(s), float(C))


@dataclass(frozen=True)
class MinorantResult:
    """Lower convex envelope of p -> log M_p on 0..p_max.

    ``vertices`` are the contact indices; ``boundary`` flags the indices on
    the trailing hull segment, where the envelope can still move if the
    sequence continues past p_max.
    """

    log_terms: np.ndarray
    vertices: Tuple[int, ...]
    boundary: Tuple[int, ...]


def log_convex_minorant(W: WeightSequence, p_max: int = 0) -> MinorantResult:
    if p_max == 0:
        p_max = W.horizon
    if not 1 <= p_max <= W.horizon:
        raise ValueError(f"p_max {p_max} outside 1..{W.horizon}")
    y = np.asarray(W.log_terms()[:p_max + 1])
    # lower hull, monotone chain over x = 0..p_max
    hull = [0]
    for x in range(1, p_max + 1):
        while len(hull) >= 2:
            x1, x2 = hull[-2], hull[-1]
            # keep y[x2] only if it lies on or below the chord (x1, x)
            if (y[x2] - y[x1]) * (x - x1) <= (y[x] - y[x1]) * (x2 - x1):
                break
            hull.pop()
        hull.append(x)
    env = np.empty(p_max + 1)
    for (x1, x2) in zip(hull[:-1], hull[1:]):
        xs = np.arange(x1, x2 + 1)
        env[x1:x2 + 1] = y[x1] + (y[x2] - y[x1]) * (xs - x1) / (x2 - x1)
    last = hull[-2] if len(hull) >= 2 else hull[-1]
    boundary = tuple(range(last, p_max + 1))
    return MinorantResult(env, tuple(hull), boundary)


def ramified_root(N: WeightSequence, r: float) -> WeightSequence:
    """Entrywise r-th root, the sequence the ramified conditions reduce to."""
    return N.power(1.0 / r)


def ramified_optimal(N: WeightSequence, r: float, s: int = 1) -> WeightSequence:
    """r-th power of the optimal sequence of the r-th root of N."""
    root = ramified_root(N, r)
    L = optimal_sequence(root, s, 1.0).sequence
    return L.power(r)


def ramified_descendant(N: WeightSequence, r: float) -> WeightSequence:
    """r-th power of the descendant of the r-th root of N."""
    root = ramified_root(N, r)
    return descendant(root).sequence.power(r)
