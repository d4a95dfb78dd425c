"""Quantified win-win: how much each side of a negotiation actually won.

A deal interval plus a settled value yields each party's winning share as
a pair of complementary piecewise-linear membership functions, with exact
inverses for "what value do I need to win X percent". On top of the core
math sit a deal-ledger engine, CSV/JSON I/O, a CLI (``winwin``), and a
stateless HTTP JSON service.
"""

from .core import (
    CHESS_FRAME,
    PRESETS,
    CurvePoint,
    EvaluationResult,
    NegotiationFrame,
    WinShare,
    Zone,
    classify_zone,
    decreasing_win,
    evaluate,
    increasing_win,
    price_for_decreasing,
    price_for_increasing,
    round_half_away,
    round_percent,
    sample_curves,
)
from .datasets import iron_ore, load_fixture, oil_deal, fixture_path
from .errors import (
    EmptyLedgerError,
    InvalidFrameError,
    InvalidInputError,
    InvalidRangeError,
    InvalidTargetError,
    ParseError,
    RecordError,
    WinWinError,
)
from .io import (
    SCHEMA_VERSION,
    parse_deal_csv,
    parse_deal_json,
    read_deal_records,
    render_output,
)
from .ledger import (
    AttributedRecord,
    Attribution,
    DealRecord,
    DerivationRule,
    LedgerSummary,
    attribute,
    evaluate_record,
    evaluate_records,
    resolve_frame,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "CHESS_FRAME",
    "PRESETS",
    "SCHEMA_VERSION",
    "AttributedRecord",
    "Attribution",
    "CurvePoint",
    "DealRecord",
    "DerivationRule",
    "EmptyLedgerError",
    "EvaluationResult",
    "InvalidFrameError",
    "InvalidInputError",
    "InvalidRangeError",
    "InvalidTargetError",
    "LedgerSummary",
    "NegotiationFrame",
    "ParseError",
    "RecordError",
    "WinShare",
    "WinWinError",
    "Zone",
    "attribute",
    "classify_zone",
    "decreasing_win",
    "evaluate",
    "evaluate_record",
    "evaluate_records",
    "fixture_path",
    "increasing_win",
    "iron_ore",
    "load_fixture",
    "oil_deal",
    "parse_deal_csv",
    "parse_deal_json",
    "price_for_decreasing",
    "price_for_increasing",
    "read_deal_records",
    "render_output",
    "resolve_frame",
    "round_half_away",
    "round_percent",
    "sample_curves",
    "summarize",
    "__version__",
]
