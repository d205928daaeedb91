"""Weight sequences stored through their log quotients.

A sequence M = (M_p) with M_0 = 1 is determined by the quotients
mu_p = M_p / M_{p-1}.  Everything here works with log mu_p to keep double
precision usable far beyond the range where M_p itself overflows.  A sequence
stores the quotients up to a finite horizon H together with a tail model
describing (or bounding) the quotients past H, so that tail sums and profile
quantities can be enclosed rather than truncated silently.

Conventions:
  * indices are 1-based for quotients: entry p of the stored array is
    log mu_p, for 1 <= p <= H;
  * normalization means mu_1 >= 1 up to tolerance, which forces M_p >= 1
    to be checkable from the quotients alone once they are nondecreasing;
  * log M_p is the prefix sum of the log quotients, with log M_0 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import (
    BeyondHorizon,
    NonFinite,
    NotNormalized,
    TailMismatch,
)

NORMALIZATION_TOL = 1e-12
LOG_CONVEXITY_TOL = 1e-12
TAIL_CONSISTENCY_RTOL = 1e-9
MIN_HORIZON = 8

_EXACT_FACTORIAL_LIMIT = 20


def log_factorial(p) -> float:
    """log p!, exact table range for small p, log-gamma beyond."""
    if p < 0:
        raise ValueError("negative factorial argument")
    if p <= _EXACT_FACTORIAL_LIMIT and float(p).is_integer():
        return math.log(math.factorial(int(p)))
    return math.lgamma(float(p) + 1.0)


@dataclass(frozen=True)
class PowerTail:
    """Quotients follow mu_k = c * k**s for k >= k0."""

    c: float
    s: float
    k0: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise ValueError("PowerTail needs c > 0")
        if not math.isfinite(self.s) or self.s < 0.0:
            raise ValueError("PowerTail needs s >= 0")
        if self.k0 < 1:
            raise ValueError("PowerTail needs k0 >= 1")

    def log_quotient(self, k: int) -> float:
        return math.log(self.c) + self.s * math.log(k)


@dataclass(frozen=True)
class RatioTail:
    """Quotients grow at least geometrically: mu_{k+1} >= q * mu_k, k >= k0."""

    q: float
    k0: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.q) and self.q > 1.0):
            raise ValueError("RatioTail needs q > 1")
        if self.k0 < 1:
            raise ValueError("RatioTail needs k0 >= 1")


@dataclass(frozen=True)
class UnknownTail:
    """No information past the horizon."""


Unknown = UnknownTail()

TailModel = Union[PowerTail, RatioTail, UnknownTail]


def _check_tail_consistency(logq: np.ndarray, tail: TailModel) -> None:
    H = logq.shape[0]
    if isinstance(tail, PowerTail):
        if tail.k0 > H + 1:
            raise TailMismatch(
                f"PowerTail starts at k0={tail.k0}, past horizon+1={H + 1}")
        ks = np.arange(tail.k0, H + 1)
        if ks.size:
            model = math.log(tail.c) + tail.s * np.log(ks)
            dev = np.abs(logq[tail.k0 - 1:] - model)
            tol = TAIL_CONSISTENCY_RTOL * np.maximum(1.0, np.abs(model))
            bad = np.nonzero(dev > tol)[0]
            if bad.size:
                k = int(ks[bad[0]])
                raise TailMismatch(
                    f"quotient {k} deviates from power model by {dev[bad[0]]:.3e}")
    elif isinstance(tail, RatioTail):
        if tail.k0 > H + 1:
            raise TailMismatch(
                f"RatioTail starts at k0={tail.k0}, past horizon+1={H + 1}")
        lo = max(tail.k0, 1)
        # the model asserts mu_{k+1} >= q mu_k for k >= k0; check stored pairs
        if lo <= H - 1:
            step = logq[lo:] - logq[lo - 1:-1]
            need = math.log(tail.q) - TAIL_CONSISTENCY_RTOL
            bad = np.nonzero(step < need)[0]
            if bad.size:
                k = lo + int(bad[0])
                raise TailMismatch(
                    f"quotient step at {k} below declared ratio: "
                    f"{step[bad[0]]:.6g} < {math.log(tail.q):.6g}")
    elif not isinstance(tail, UnknownTail):
        raise TypeError(f"unsupported tail model {type(tail).__name__}")


@dataclass(frozen=True, eq=False)
class WeightSequence:
    """Log quotients up to a horizon plus a tail model.

    Construct through :func:`from_quotients` (or the family helpers), not
    directly; the constructors validate finiteness, normalization and tail
    consistency.  Instances are immutable; derived caches live in private
    attributes set once at construction time.
    """

    log_quotients: np.ndarray
    tail: TailModel
    label: str = ""

    def __post_init__(self):
        arr = np.asarray(self.log_quotients, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError("log quotients must be one dimensional")
        if arr.shape[0] < MIN_HORIZON:
            raise ValueError(
                f"horizon {arr.shape[0]} below minimum {MIN_HORIZON}")
        if not np.all(np.isfinite(arr)):
            raise NonFinite("log quotients contain non-finite entries")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "log_quotients", arr)
        cum = np.concatenate(([0.0], np.cumsum(arr)))
        cum.setflags(write=False)
        object.__setattr__(self, "_cum", cum)

    @property
    def horizon(self) -> int:
        return self.log_quotients.shape[0]

    def log_quotient(self, p: int) -> float:
        """log mu_p; p = 0 returns 0 by the convention mu_0 = 1."""
        if p < 0:
            raise ValueError("quotient index must be nonnegative")
        if p == 0:
            return 0.0
        if p <= self.horizon:
            return float(self.log_quotients[p - 1])
        if isinstance(self.tail, PowerTail):
            return self.tail.log_quotient(p)
        if isinstance(self.tail, RatioTail):
            # equality extension: the slowest growth the model certifies
            return float(self.log_quotients[-1]) \
                + (p - self.horizon) * math.log(self.tail.q)
        raise BeyondHorizon(
            f"quotient {p} past horizon {self.horizon} with unknown tail")

    def log_term(self, p: int) -> float:
        """log M_p."""
        if p < 0:
            raise ValueError("term index must be nonnegative")
        if p <= self.horizon:
            return float(self._cum[p])
        H = self.horizon
        if isinstance(self.tail, PowerTail):
            c, s = self.tail.c, self.tail.s
            return float(self._cum[H]) + (p - H) * math.log(c) \
                + s * (math.lgamma(p + 1.0) - math.lgamma(H + 1.0))
        if isinstance(self.tail, RatioTail):
            n = p - H
            lnq = math.log(self.tail.q)
            return float(self._cum[H]) + n * float(self.log_quotients[-1]) \
                + 0.5 * n * (n + 1) * lnq
        raise BeyondHorizon(
            f"term {p} past horizon {self.horizon} with unknown tail")

    def log_terms(self) -> np.ndarray:
        """Array of log M_p for p = 0..H (read-only view)."""
        return self._cum

    def log_root(self, p: int) -> float:
        """log (M_p)^(1/p)."""
        if p < 1:
            raise ValueError("root index must be positive")
        return self.log_term(p) / p

    def little_m(self, p: int) -> float:
        """log (M_p / p!)."""
        if p < 0:
            raise ValueError("term index must be nonnegative")
        return self.log_term(p) - log_factorial(p)

    def power(self, r: float) -> "WeightSequence":
        """Entrywise power: quotients mu_p^r, tail transformed to match."""
        if not (math.isfinite(r) and r > 0.0):
            raise ValueError("power exponent must be positive and finite")
        logq = self.log_quotients * r
        tail: TailModel
        if isinstance(self.tail, PowerTail):
            tail = PowerTail(self.tail.c ** r, self.tail.s * r, self.tail.k0)
        elif isinstance(self.tail, RatioTail):
            tail = RatioTail(self.tail.q ** r, self.tail.k0)
        else:
            tail = Unknown
        label = f"({self.label})^{r:g}" if self.label else ""
        return _from_quotients_unchecked(logq, tail, label)

    def geometric_rescale(self, c: float, strict: bool = True) -> "WeightSequence":
        """Divide M_p by c^p, i.e. shift every log quotient down by log c.

        With ``strict`` the result must still be normalized; pass
        ``strict=False`` for intermediate sequences whose first quotient may
        drop below 1.
        """
        if not (math.isfinite(c) and c > 0.0):
            raise ValueError("rescale factor must be positive and finite")
        lnc = math.log(c)
        logq = self.log_quotients - lnc
        tail: TailModel
        if isinstance(self.tail, PowerTail):
            tail = PowerTail(self.tail.c / c, self.tail.s, self.tail.k0)
        elif isinstance(self.tail, RatioTail):
            tail = RatioTail(self.tail.q, self.tail.k0)
        else:
            tail = Unknown
        label = f"{self.label}/{c:g}^p" if self.label else ""
        if strict and logq[0] < -NORMALIZATION_TOL:
            raise NotNormalized(
                f"rescale by {c:g} drops the first quotient to "
                f"exp({logq[0]:.6g})")
        return _from_quotients_unchecked(logq, tail, label)


def from_quotients(log_quotients, tail: TailModel = Unknown,
                   label: str = "") -> WeightSequence:
    """Build a normalized weight sequence from log quotients.

    Raises NonFinite for NaN or infinite entries, NotNormalized when the
    first quotient is below 1 (beyond tolerance), and TailMismatch when the
    stored quotients disagree with the declared tail model on the overlap.
    """
    arr = np.asarray(log_quotients, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("log quotients must be one dimensional")
    if not np.all(np.isfinite(arr)):
        raise NonFinite("log quotients contain non-finite entries")
    if arr.shape[0] >= 1 and arr[0] < -NORMALIZATION_TOL:
        raise NotNormalized(
            f"first log quotient {arr[0]:.6g} below -{NORMALIZATION_TOL:g}")
    _check_tail_consistency(arr, tail)
    return WeightSequence(arr, tail, label)


def _from_quotients_unchecked(log_quotients, tail: TailModel,
                              label: str = "") -> WeightSequence:
    """Constructor for outputs of constructions: skips the normalization
    check but still validates finiteness and tail consistency."""
    arr = np.asarray(log_quotients, dtype=np.float64)
    _check_tail_consistency(arr, tail)
    return WeightSequence(arr, tail, label)


def gevrey(s: float, H: int = 64) -> WeightSequence:
    """Gevrey sequence M_p = (p!)^s, stored to horizon H."""
    if not (math.isfinite(s) and s >= 1.0):
        raise ValueError("gevrey index must satisfy s >= 1")
    if H < MIN_HORIZON:
        raise ValueError(f"horizon {H} below minimum {MIN_HORIZON}")
    logq = s * np.log(np.arange(1, H + 1, dtype=np.float64))
    return WeightSequence(logq, PowerTail(1.0, s, 1), f"gevrey({s:g})")


def power_quotient_family(c: float, s: float, H: int) -> WeightSequence:
    """Sequence with quotients mu_k = c * k**s throughout; needs c >= 1."""
    if H < MIN_HORIZON:
        raise ValueError(f"horizon {H} below minimum {MIN_HORIZON}")
    ks = np.arange(1, H + 1, dtype=np.float64)
    logq = math.log(c) + s * np.log(ks)
    return from_quotients(logq, PowerTail(c, s, 1),
                          f"power-tail({c:g},{s:g})")


@dataclass(frozen=True)
class LCReport:
    """Log-convexity report.

    ``log_convex_defect`` is the largest drop between consecutive log
    quotients (nonpositive when the quotients are nondecreasing);
    ``roots_increasing_to`` is the last root value log (M_H)^(1/H), the level
    the nondecreasing root sequence has reached at the horizon.
    """

    normalized: bool
    log_convex_defect: float
    roots_increasing_to: float


def check_LC(W: WeightSequence) -> LCReport:
    lq = W.log_quotients
    defect = float(np.max(lq[:-1] - lq[1:])) if lq.shape[0] > 1 else 0.0
    return LCReport(
        normalized=bool(lq[0] >= -NORMALIZATION_TOL),
        log_convex_defect=defect,
        roots_increasing_to=W.log_root(W.horizon),
    )


def is_log_convex(W: WeightSequence, tol: float = LOG_CONVEXITY_TOL) -> bool:
    rep = check_LC(W)
    return rep.normalized and rep.log_convex_defect <= tol


def quotients_diverge(W: WeightSequence) -> Optional[bool]:
    """Whether the tail model certifies mu_p -> infinity; None if unknown."""
    if isinstance(W.tail, PowerTail):
        return W.tail.s > 0.0
    if isinstance(W.tail, RatioTail):
        return True
    return None
