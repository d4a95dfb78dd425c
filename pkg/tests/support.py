"""Shared test data and the independent oracle.

The oracle recomputes both membership values with exact rational
arithmetic (floats convert to Fractions losslessly), coded from the
piecewise definition alone. It shares no code path with the package.
"""

from __future__ import annotations

from fractions import Fraction


def oracle_shares(lower: float, upper: float, p: float) -> tuple[Fraction, Fraction]:
    lo, up, pp = Fraction(lower), Fraction(upper), Fraction(p)
    width = up - lo
    if pp < lo:
        increasing = Fraction(0)
    elif pp > up:
        increasing = Fraction(1)
    else:
        increasing = (pp - lo) / width
    if pp < lo:
        decreasing = Fraction(1)
    elif pp > up:
        decreasing = Fraction(0)
    else:
        decreasing = (up - pp) / width
    return increasing, decreasing


def oracle_percent(share: Fraction) -> int:
    scaled = share * 100
    floor = scaled.numerator // scaled.denominator
    return floor + 1 if (scaled - floor) >= Fraction(1, 2) else floor


# Rounded (increasing, decreasing) percent display pairs for the toy
# share-sale interval [33, 66] sampled at 33..65 step 2.
TOY_TABLE = [
    (33, 0, 100), (35, 6, 94), (37, 12, 88), (39, 18, 82), (41, 24, 76),
    (43, 30, 70), (45, 36, 64), (47, 42, 58), (49, 48, 52), (51, 55, 45),
    (53, 61, 39), (55, 67, 33), (57, 73, 27), (59, 79, 21), (61, 85, 15),
    (63, 91, 9), (65, 97, 3),
]

# Expected display pairs for the bundled oil ledger (cost 10.57, settled
# 16 under the per-record Brent reference), one row per shipped record.
OIL_TABLE = [
    ("Dec 30", 72, 28), ("Jan 6", 73, 27), ("Jan 13", 70, 30), ("Jan 21", 70, 30),
    ("Jan 27", 67, 33), ("Feb 3", 64, 36), ("Feb 10", 63, 37), ("Feb 18", 66, 34),
    ("Feb 24", 65, 35), ("Mar 2", 61, 39), ("Mar 6", 54, 46), ("Mar 10", 40, 60),
    ("Mar 16", 18, 82), ("Mar 24", 3, 97), ("Mar 30", 0, 100), ("Apr 7", 25, 75),
    ("Apr 14", 16, 84), ("Apr 20", 0, 100), ("Apr 28", 0, 100), ("May 4", 4, 96),
    ("May 11", 16, 84), ("May 18", 34, 66), ("May 26", 36, 64), ("Jun 1", 42, 58),
    ("Jun 8", 47, 53), ("Jun 15", 45, 55), ("Jun 22", 51, 49), ("Jun 29", 49, 51),
    ("Jul 6", 51, 49), ("Jul 13", 50, 50), ("Jul 20", 51, 49), ("Jul 27", 51, 49),
    ("Aug 3", 52, 48), ("Aug 10", 54, 46), ("Aug 17", 54, 46), ("Aug 24", 54, 46),
    ("Aug 31", 50, 50), ("Sep 8", 45, 55), ("Sep 14", 45, 55), ("Sep 21", 48, 52),
    ("Sep 28", 50, 50), ("Oct 5", 48, 52), ("Oct 12", 49, 51), ("Oct 19", 50, 50),
    ("Oct 26", 46, 54), ("Nov 2", 44, 56), ("Nov 9", 50, 50), ("Nov 16", 52, 48),
    ("Nov 23", 55, 45), ("Nov 30", 57, 43),
]

# Expected display pairs for the bundled ore ledger. The 2009 rounds are
# price cuts on the signed axis, so the sellers' share keeps rising with
# the (negative) settled change.
ORE_TABLE = [
    ("2005", 54, 46),
    ("2006", 64, 36),
    ("2007", 90, 10),
    ("2008 Southern ore", 92, 8),
    ("2008 Northern ore", 100, 0),
    ("2009 Southern ore", 27, 73),
    ("2009 Northern ore", 2, 98),
]
