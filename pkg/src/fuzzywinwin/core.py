"""Closed-form win-share mathematics for two-party interval negotiations.

A negotiation is framed as a closed interval ``[lower, upper]`` on some
shared axis (a price, a percent change, a move count). One party's degree
of winning rises linearly across the interval while the other party's
falls, so for any settled value the two shares are exact complements.
Everything in this module is a pure function of immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import (
    InvalidFrameError,
    InvalidInputError,
    InvalidRangeError,
    InvalidTargetError,
)

# A win share is a plain fraction in [0, 1]; use round_percent() for display.
WinShare = float


class Zone(Enum):
    """Qualitative region a settled value falls in, relative to the frame.

    Values left of the interval are a loss for the increasing party, values
    right of it a loss for the decreasing party, and values inside (bounds
    included) are the zone of possible agreement where winning is a matter
    of degree.
    """

    LOSE_WIN = "lose_win"
    FUZZY_WIN_WIN = "fuzzy_win_win"
    WIN_LOSE = "win_lose"


@dataclass(frozen=True)
class NegotiationFrame:
    """Immutable description of the negotiated interval and its two parties.

    ``increasing_party`` names whoever benefits as the settled value rises
    (classically the seller of a product priced between cost and asking
    price); ``decreasing_party`` benefits as it falls. Bounds may be any
    finite reals with ``lower < upper``; the unit is whatever ``axis_label``
    says it is.
    """

    lower: float
    upper: float
    increasing_party: str = "seller"
    decreasing_party: str = "buyer"
    axis_label: str = "value"

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "lower", float(self.lower))
            object.__setattr__(self, "upper", float(self.upper))
        except (TypeError, ValueError) as exc:
            raise InvalidFrameError(f"frame bounds must be numbers: {exc}") from None
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise InvalidFrameError(
                f"frame bounds must be finite, got [{self.lower}, {self.upper}]"
            )
        if not self.lower < self.upper:
            raise InvalidFrameError(
                f"frame requires lower < upper, got [{self.lower}, {self.upper}]"
            )
        if not math.isfinite(self.upper - self.lower):
            raise InvalidFrameError("frame width overflows the float range")

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class EvaluationResult:
    """Both parties' shares and the zone for one settled value.

    ``increasing_share + decreasing_share == 1`` up to float rounding.
    """

    settled_value: float
    increasing_share: WinShare
    decreasing_share: WinShare
    zone: Zone


class CurvePoint(NamedTuple):
    value: float
    increasing_share: WinShare
    decreasing_share: WinShare


# Preset for the novice-vs-grandmaster chess framing: the game length in
# moves plays the role of the negotiated value, the novice gains from a
# longer game. Same mathematics, relabeled axis.
CHESS_FRAME = NegotiationFrame(
    lower=38.0,
    upper=76.0,
    increasing_party="novice",
    decreasing_party="grandmaster",
    axis_label="moves",
)

PRESETS: dict[str, NegotiationFrame] = {"chess": CHESS_FRAME}


def _checked_value(p: float) -> float:
    try:
        p = float(p)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"settled value must be a number: {exc}") from None
    if not math.isfinite(p):
        raise InvalidInputError(f"settled value must be finite, got {p}")
    return p


def _checked_target(target: float) -> float:
    try:
        target = float(target)
    except (TypeError, ValueError) as exc:
        raise InvalidTargetError(f"target share must be a number: {exc}") from None
    if not (math.isfinite(target) and 0.0 <= target <= 1.0):
        raise InvalidTargetError(f"target share must lie in [0, 1], got {target}")
    return target


def increasing_win(frame: NegotiationFrame, p: float) -> WinShare:
    """Win share of the party whose position improves as ``p`` rises.

    Zero at or below the frame's lower bound, one at or above the upper
    bound, linear in between; continuous and nondecreasing in ``p``.
    """
    p = _checked_value(p)
    if p <= frame.lower:
        return 0.0
    if p >= frame.upper:
        return 1.0
    return (p - frame.lower) / (frame.upper - frame.lower)


def decreasing_win(frame: NegotiationFrame, p: float) -> WinShare:
    """Win share of the party whose position improves as ``p`` falls.

    Mirror image of :func:`increasing_win`: one at or below the lower
    bound, zero at or above the upper bound, linear in between.
    """
    p = _checked_value(p)
    if p <= frame.lower:
        return 1.0
    if p >= frame.upper:
        return 0.0
    return (frame.upper - p) / (frame.upper - frame.lower)


def classify_zone(frame: NegotiationFrame, p: float) -> Zone:
    """Classify a settled value; both interval endpoints count as inside."""
    p = _checked_value(p)
    if p < frame.lower:
        return Zone.LOSE_WIN
    if p > frame.upper:
        return Zone.WIN_LOSE
    return Zone.FUZZY_WIN_WIN


def evaluate(frame: NegotiationFrame, p: float) -> EvaluationResult:
    """Bundle both parties' shares and the zone for one settled value."""
    p = _checked_value(p)
    return EvaluationResult(
        settled_value=p,
        increasing_share=increasing_win(frame, p),
        decreasing_share=decreasing_win(frame, p),
        zone=classify_zone(frame, p),
    )


def price_for_increasing(frame: NegotiationFrame, target: WinShare) -> float:
    """Value the increasing party must settle at to win ``target`` exactly.

    Inverse of :func:`increasing_win` on the frame: returns ``lower`` for
    target 0 and ``upper`` for target 1 (exact, no arithmetic), the linear
    interpolant otherwise.
    """
    target = _checked_target(target)
    if target == 0.0:
        return frame.lower
    if target == 1.0:
        return frame.upper
    return target * (frame.upper - frame.lower) + frame.lower


def price_for_decreasing(frame: NegotiationFrame, target: WinShare) -> float:
    """Value the decreasing party must settle at to win ``target`` exactly."""
    target = _checked_target(target)
    if target == 0.0:
        return frame.upper
    if target == 1.0:
        return frame.lower
    return frame.upper - target * (frame.upper - frame.lower)


def sample_curves(
    frame: NegotiationFrame, start: float, end: float, n: int
) -> list[CurvePoint]:
    """Sample both membership curves on an evenly spaced grid.

    Returns ``n`` points covering ``[start, end]`` inclusive of both
    endpoints (the final point is pinned to ``end`` rather than accumulated,
    so grids are exact). Requires ``n >= 2`` and ``start < end``.
    """
    if n < 2:
        raise InvalidRangeError(f"need at least 2 sample points, got {n}")
    start = _checked_value(start)
    end = _checked_value(end)
    if not start < end:
        raise InvalidRangeError(f"need start < end, got [{start}, {end}]")
    step = (end - start) / (n - 1)
    points = []
    for i in range(n):
        p = end if i == n - 1 else start + step * i
        points.append(CurvePoint(p, increasing_win(frame, p), decreasing_win(frame, p)))
    return points


def round_half_away(x: float) -> int:
    """Round to the nearest integer with exact halves moving away from zero.

    Python's built-in ``round`` ties to even (2.5 -> 2); display percents
    here need 50.5 -> 51, so the tie direction is pinned explicitly.
    """
    if x >= 0:
        return math.floor(x + 0.5)
    return math.ceil(x - 0.5)


def round_percent(share: WinShare) -> int:
    """Whole display percent in [0, 100] for a share in [0, 1]."""
    return round_half_away(share * 100.0)
