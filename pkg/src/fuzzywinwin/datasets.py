"""Bundled real-world ledgers, shipped as CSV in the standard schema.

``oil_deal``: weekly records of a 2019-2020 crude contract where the buyer
paid a fixed 16 under the Brent benchmark and the barrel cost 10.57 to
produce, so each week's frame is [10.57, Brent] with the settled price
derived from the benchmark.

``iron_ore``: the 2005-2009 annual ore price negotiations, expressed as
percent change on the prior benchmark. The 2009 rounds negotiated price
*cuts*; they are encoded on the same signed axis (bounds [-45, 0]) so the
sellers stay the increasing party throughout.
"""

from __future__ import annotations

from importlib.resources import files
from pathlib import Path

from .io import parse_deal_csv
from .ledger import DealRecord, DerivationRule

OIL_DEAL_RULE = DerivationRule(
    constant_cost=10.57,
    settled_offset=-16.0,
    increasing_party="Iraq",
    decreasing_party="Jordan",
    axis_label="USD/barrel",
)

IRON_ORE_RULE = DerivationRule(
    increasing_party="sellers",
    decreasing_party="buyers",
    axis_label="price change %",
)

_FIXTURES = {
    "oil_deal": OIL_DEAL_RULE,
    "iron_ore": IRON_ORE_RULE,
}


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled CSV (``oil_deal`` or ``iron_ore``)."""
    if name not in _FIXTURES:
        raise KeyError(f"unknown fixture {name!r}: expected one of {sorted(_FIXTURES)}")
    return Path(str(files(__package__) / "data" / f"{name}.csv"))


def load_fixture(name: str) -> tuple[DerivationRule, list[DealRecord]]:
    """Load a bundled ledger as (derivation rule, records)."""
    rule = _FIXTURES.get(name)
    if rule is None:
        raise KeyError(f"unknown fixture {name!r}: expected one of {sorted(_FIXTURES)}")
    data = (files(__package__) / "data" / f"{name}.csv").read_bytes()
    return rule, parse_deal_csv(data)


def oil_deal() -> tuple[DerivationRule, list[DealRecord]]:
    return load_fixture("oil_deal")


def iron_ore() -> tuple[DerivationRule, list[DealRecord]]:
    return load_fixture("iron_ore")
