"""Tail sums of reciprocal quotients and the profiles built from them.

The central quantity is T_p = sum_{k >= p} 1 / mu_p over the quotients of a
sequence.  The part up to the horizon is summed directly; the rest is enclosed
from the tail model by integral comparison (power model) or a geometric bound
(ratio model).  An unknown tail gives hi = +inf, which downstream code treats
as "cannot certify" rather than an error.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import OverflowHalt
from .intervals import Interval, Verdict, fails, holds, inconclusive
from .sequences import PowerTail, RatioTail, UnknownTail, WeightSequence


def _suffix_sums(W: WeightSequence) -> np.ndarray:
    """S[p] = sum_{k=p}^{H} 1/mu_k for 1 <= p <= H+1 (S[H+1] = 0)."""
    cached = getattr(W, "_suffix", None)
    if cached is not None:
        return cached
    inv = np.exp(-W.log_quotients)
    S = np.zeros(W.horizon + 2)
    S[1:W.horizon + 1] = np.cumsum(inv[::-1])[::-1]
    S.setflags(write=False)
    object.__setattr__(W, "_suffix", S)
    return S


def _remainder(W: WeightSequence, a: int) -> Interval:
    """Enclosure of sum_{k >= a} 1/mu_k for a >= H+1."""
    tail = W.tail
    if isinstance(tail, PowerTail):
        c, s = tail.c, tail.s
        if s <= 1.0:
            return Interval(0.0, math.inf)
        # integral comparison for the decreasing summand 1/(c k^s)
        integral = a ** (1.0 - s) / (c * (s - 1.0))
        first = 1.0 / (c * a ** s)
        return Interval(integral, integral + first)
    if isinstance(tail, RatioTail):
        lnq = math.log(tail.q)
        ln_mu_a = float(W.log_quotients[-1]) + (a - W.horizon) * lnq
        # 1/mu_k <= (1/mu_a) q^{-(k-a)}; geometric sum
        hi = math.exp(-ln_mu_a) * tail.q / (tail.q - 1.0)
        return Interval(0.0, hi)
    return Interval(0.0, math.inf)


def tail_sum(W: WeightSequence, p: int) -> Interval:
    """Enclosure of T_p = sum_{k >= p} 1/mu_k."""
    if p < 1:
        raise ValueError("tail sum index must be positive")
    H = W.horizon
    S = _suffix_sums(W)
    finite = float(S[p]) if p <= H else 0.0
    rem = _remainder(W, max(p, H + 1))
    return Interval(finite + rem.lo, finite + rem.hi)


def is_nonquasianalytic(W: WeightSequence) -> Verdict:
    """Whether T_1 is finite, as far as the tail model can certify."""
    t = tail_sum(W, 1)
    tail = W.tail
    if isinstance(tail, PowerTail):
        if tail.s > 1.0:
            return holds(bound=t)
        return fails(reason="power tail with exponent <= 1 diverges", bound=t)
    if isinstance(tail, RatioTail):
        return holds(bound=t)
    return inconclusive("tail model unknown", bound=t)


def _scaled_tail(W: WeightSequence, ln_factor: float, start: int) -> Interval:
    T = tail_sum(W, start)
    try:
        lo = 0.0 if T.lo == 0.0 else math.exp(ln_factor + math.log(T.lo))
        if math.isinf(T.hi):
            hi = math.inf
        else:
            hi = math.exp(ln_factor + math.log(T.hi)) if T.hi > 0.0 else 0.0
    except OverflowError:
        raise OverflowHalt("profile value exceeds float range")
    if math.isinf(lo):
        raise OverflowHalt("profile value exceeds float range")
    return Interval(lo, hi)


def gamma1_profile(W: WeightSequence, p: int) -> Interval:
    """Enclosure of (mu_p / p) * T_p for 1 <= p <= H."""
    if not 1 <= p <= W.horizon:
        raise ValueError(f"profile index {p} outside 1..{W.horizon}")
    ln_factor = float(W.log_quotients[p - 1]) - math.log(p)
    return _scaled_tail(W, ln_factor, p)


def nongamma2_profile(W: WeightSequence, p: int) -> Interval:
    """Enclosure of (mu_p / p) * T_{2p} for 1 <= p <= H.

    Needs 2p <= H+1 or a non-unknown tail model; otherwise the enclosure
    would be vacuous (the whole sum would come from an unknown tail).
    """
    if not 1 <= p <= W.horizon:
        raise ValueError(f"profile index {p} outside 1..{W.horizon}")
    if 2 * p > W.horizon + 1 and isinstance(W.tail, UnknownTail):
        raise ValueError(
            f"index {p}: doubled start 2p={2 * p} is past the horizon and "
            "the tail is unknown")
    ln_factor = float(W.log_quotients[p - 1]) - math.log(p)
    return _scaled_tail(W, ln_factor, 2 * p)
