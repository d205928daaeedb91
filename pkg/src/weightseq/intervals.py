"""Closed interval enclosures and three valued verdicts.

Intervals are plain float pairs.  Endpoint arithmetic is not outward rounded;
enclosures stay honest because every bound is derived from monotone formulas
whose slack (integral comparison, model remainders) dwarfs float rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional


class TriState(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; hi may be +inf, lo must be finite."""

    lo: float
    hi: float

    def __post_init__(self):
        lo = float(self.lo)
        hi = float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoint is NaN")
        if not math.isfinite(lo):
            raise ValueError("interval lower endpoint must be finite")
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(x, x)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        if not math.isfinite(self.hi):
            return math.inf
        return 0.5 * (self.lo + self.hi)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def shift(self, c: float) -> "Interval":
        return Interval(self.lo + c, self.hi + c)

    def add(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, c: float) -> "Interval":
        # nonnegative factors only, so orientation never flips
        if c < 0.0:
            raise ValueError("scale factor must be nonnegative")
        if c == 0.0:
            return Interval(0.0, 0.0)
        return Interval(c * self.lo, c * self.hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def log(self) -> "Interval":
        if self.lo <= 0.0:
            raise ValueError("log needs a positive interval")
        return Interval(math.log(self.lo), math.log(self.hi))

    def exp(self) -> "Interval":
        try:
            lo = math.exp(self.lo)
        except OverflowError:
            raise ValueError("exp overflows at the lower endpoint")
        try:
            hi = math.exp(self.hi)
        except OverflowError:
            hi = math.inf
        return Interval(lo, hi)

    def __add__(self, other):
        if isinstance(other, Interval):
            return self.add(other)
        return self.shift(float(other))

    def __str__(self) -> str:
        return f"[{self.lo:.17g}, {self.hi:.17g}]"


@dataclass(frozen=True)
class Verdict:
    """Three valued answer with an optional certificate payload.

    ``bound`` encloses the certified quantity when state is HOLDS, ``witness``
    points at a failing index when state is FAILS, ``reason`` explains an
    INCONCLUSIVE answer.
    """

    state: TriState
    bound: Optional[Interval] = None
    witness: Optional[int] = None
    reason: str = ""

    def __str__(self) -> str:
        return str(self.state)


def holds(bound: Optional[Interval] = None, reason: str = "") -> Verdict:
    return Verdict(TriState.HOLDS, bound=bound, reason=reason)


def fails(witness: Optional[int] = None, reason: str = "",
          bound: Optional[Interval] = None) -> Verdict:
    return Verdict(TriState.FAILS, bound=bound, witness=witness, reason=reason)


def inconclusive(reason: str, bound: Optional[Interval] = None) -> Verdict:
    return Verdict(TriState.INCONCLUSIVE, bound=bound, reason=reason)
