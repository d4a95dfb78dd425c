"""Deal-ledger engine: evaluate dated records, attribute wins, summarize.

A ledger is an ordered list of :class:`DealRecord` rows plus one
:class:`DerivationRule` describing how each row's negotiation frame and
settled value are obtained (constants, per-record columns, or an offset
from a per-record reference price). Every row is scored independently,
so evaluation order never matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .core import (
    EvaluationResult,
    NegotiationFrame,
    evaluate,
    round_half_away,
    round_percent,
)
from .errors import EmptyLedgerError, InvalidFrameError, InvalidInputError, RecordError


@dataclass(frozen=True)
class DealRecord:
    """One raw negotiated data point; numeric fields are optional because a
    derivation rule may supply them."""

    label: str
    cost_price: float | None = None
    reference_price: float | None = None
    settled_price: float | None = None


@dataclass(frozen=True)
class DerivationRule:
    """Recipe resolving each record into a frame plus a settled value.

    ``constant_cost`` / ``constant_upper`` override the per-record
    ``cost_price`` / ``reference_price`` columns when set. ``settled_offset``
    derives the settled value as ``reference_price + settled_offset`` (e.g.
    a contract fixing the deal at 16 below a market benchmark); when unset
    the per-record ``settled_price`` column is used. Party labels are
    stamped onto every resolved frame.
    """

    constant_cost: float | None = None
    constant_upper: float | None = None
    settled_offset: float | None = None
    increasing_party: str = "seller"
    decreasing_party: str = "buyer"
    axis_label: str = "value"

    @property
    def reference_is_upper(self) -> bool:
        """True when each record's reference price is the frame upper bound."""
        return self.constant_upper is None


class Attribution(Enum):
    """Which party a scored record is credited to; a tie credits both."""

    INCREASING_WINS = "increasing_wins"
    DECREASING_WINS = "decreasing_wins"
    TIE = "tie"


@dataclass(frozen=True)
class AttributedRecord:
    """A record joined with its resolved frame, raw shares, display percents,
    and win attribution."""

    record: DealRecord
    frame: NegotiationFrame
    evaluation: EvaluationResult
    rounded_increasing: int
    rounded_decreasing: int
    attribution: Attribution


@dataclass(frozen=True)
class LedgerSummary:
    """Aggregates over one ledger run.

    Ties credit both win counts, so
    ``increasing_win_count + decreasing_win_count - tie_count == record_count``.
    Average percents are means of the per-record display percents, rounded
    once more for display.
    """

    record_count: int
    increasing_win_count: int
    decreasing_win_count: int
    tie_count: int
    avg_increasing_percent: int
    avg_decreasing_percent: int
    full_win_count_increasing: int
    full_win_count_decreasing: int


def _resolved(label: str, name: str, value: float | None) -> float:
    if value is None:
        raise RecordError(label, f"no value available for {name}")
    return value


def resolve_frame(rule: DerivationRule, record: DealRecord) -> tuple[NegotiationFrame, float]:
    """Resolve one record against a rule into (frame, settled value).

    Raises :class:`RecordError` naming the record when a needed column is
    missing or the resolved bounds do not form a valid frame.
    """
    label = record.label
    lower = rule.constant_cost
    if lower is None:
        lower = _resolved(label, "cost_price", record.cost_price)
    upper = rule.constant_upper
    if upper is None:
        upper = _resolved(label, "reference_price", record.reference_price)
    if rule.settled_offset is not None:
        reference = _resolved(label, "reference_price", record.reference_price)
        settled = reference + rule.settled_offset
    else:
        settled = _resolved(label, "settled_price", record.settled_price)
    try:
        frame = NegotiationFrame(
            lower=lower,
            upper=upper,
            increasing_party=rule.increasing_party,
            decreasing_party=rule.decreasing_party,
            axis_label=rule.axis_label,
        )
    except InvalidFrameError as exc:
        raise RecordError(label, str(exc)) from None
    return frame, settled


def attribute(rounded_increasing: int, rounded_decreasing: int) -> Attribution:
    """Win attribution from display percents: a 50/50 render is a tie.

    Attribution deliberately works on the rounded values, not the raw
    shares, so rows that *display* as equal are credited as equal.
    """
    if rounded_increasing == 50 and rounded_decreasing == 50:
        return Attribution.TIE
    if rounded_increasing > rounded_decreasing:
        return Attribution.INCREASING_WINS
    return Attribution.DECREASING_WINS


def evaluate_record(rule: DerivationRule, record: DealRecord) -> AttributedRecord:
    """Score one record: resolve its frame, evaluate, round, attribute."""
    frame, settled = resolve_frame(rule, record)
    try:
        result = evaluate(frame, settled)
    except InvalidInputError as exc:  # non-finite settled value
        raise RecordError(record.label, str(exc)) from None
    rounded_inc = round_percent(result.increasing_share)
    rounded_dec = round_percent(result.decreasing_share)
    return AttributedRecord(
        record=record,
        frame=frame,
        evaluation=result,
        rounded_increasing=rounded_inc,
        rounded_decreasing=rounded_dec,
        attribution=attribute(rounded_inc, rounded_dec),
    )


def evaluate_records(
    rule: DerivationRule, records: Iterable[DealRecord]
) -> list[AttributedRecord]:
    """Score every record in order, failing fast on the first bad row."""
    return [evaluate_record(rule, record) for record in records]


def summarize(records: Sequence[AttributedRecord]) -> LedgerSummary:
    """Fold attributed records into counts and average display percents."""
    if not records:
        raise EmptyLedgerError("cannot summarize an empty ledger")
    ties = sum(1 for r in records if r.attribution is Attribution.TIE)
    increasing = ties + sum(
        1 for r in records if r.attribution is Attribution.INCREASING_WINS
    )
    decreasing = ties + sum(
        1 for r in records if r.attribution is Attribution.DECREASING_WINS
    )
    n = len(records)
    return LedgerSummary(
        record_count=n,
        increasing_win_count=increasing,
        decreasing_win_count=decreasing,
        tie_count=ties,
        avg_increasing_percent=round_half_away(
            sum(r.rounded_increasing for r in records) / n
        ),
        avg_decreasing_percent=round_half_away(
            sum(r.rounded_decreasing for r in records) / n
        ),
        full_win_count_increasing=sum(1 for r in records if r.rounded_increasing == 100),
        full_win_count_decreasing=sum(1 for r in records if r.rounded_decreasing == 100),
    )
