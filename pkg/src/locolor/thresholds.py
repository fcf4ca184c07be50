"""Exact bookkeeping of minimum-degree thresholds for the locally colourable families.

Each row records a degree fraction delta such that every graph of the
family with minimum degree strictly above delta * n has the stated
property.  Rows parameterised by (a, b) store gamma, where the threshold
for (a+b)-colourability is 1 - 1/(a + b - 1 + gamma); the consistency
check recomputes every such threshold from its stored gamma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

PROVEN_EXACT = "proven-exact"
UPPER_BOUND = "upper-bound"
LOWER_BOUND = "lower-bound"
EXISTENCE_ONLY = "existence-only"


@dataclass(frozen=True)
class ThresholdEntry:
    family: str
    a: Optional[int]
    b: Optional[int]
    colours: Optional[int]  # None for limiting (threshold) rows
    threshold: Optional[Fraction]
    gamma: Optional[Fraction]
    status: str
    property: str


def _fab(a: int, b: int) -> str:
    return f"F({a},{b})"


def build_table() -> tuple[ThresholdEntry, ...]:
    rows: list[ThresholdEntry] = []

    # First interesting chromatic-profile value for the bipartite column:
    # gamma(a,2) = 1/3 for every a.
    for a in (1, 2, 3):
        rows.append(
            ThresholdEntry(
                _fab(a, 2), a, 2, a + 2,
                1 - Fraction(1, a + 1 + Fraction(1, 3)), Fraction(1, 3),
                PROVEN_EXACT, f"({a + 2})-colourable",
            )
        )
    # gamma(a,b) <= 1/7 once b >= 3.
    for a, b in ((1, 3), (1, 4), (2, 3)):
        l = a + b - 1
        rows.append(
            ThresholdEntry(
                _fab(a, b), a, b, a + b,
                1 - Fraction(1, l + Fraction(1, 7)), Fraction(1, 7),
                UPPER_BOUND, f"({a + b})-colourable",
            )
        )
    # Chromatic thresholds: 1 - 1/l with l = a + b - 1.
    for a, b in ((1, 2), (1, 3), (2, 2), (2, 3)):
        l = a + b - 1
        rows.append(
            ThresholdEntry(
                _fab(a, b), a, b, None, 1 - Fraction(1, l), None,
                PROVEN_EXACT, "bounded chromatic number",
            )
        )
    # Structure thresholds for locally bipartite graphs (the 4/7 row for
    # 3-colourability, tight at balanced blow-ups of C7bar, is the a = 1
    # entry of the first loop above).
    structure = [
        (Fraction(5, 9), "homomorphic to C7bar; tight for blow-ups of H2plus"),
        (Fraction(6, 11), "4-colourable; 3-colourable or contains C7bar or H2plus"),
        (Fraction(7, 13), "3-colourable or contains H2; tight for blow-ups of T0"),
        (Fraction(8, 15), "3-colourable or contains H2 or T0; tight for blow-ups of H1plusplus"),
    ]
    for threshold, prop in structure:
        rows.append(
            ThresholdEntry(_fab(1, 2), 1, 2, None, threshold, None, PROVEN_EXACT, prop)
        )
    # Below 5/9 an unquantified margin still forces a homomorphism target;
    # the constant is not pinned down, so the row carries no number.
    rows.append(
        ThresholdEntry(
            _fab(1, 2), 1, 2, None, None, None, EXISTENCE_ONLY,
            "some margin below 5/9 forces a homomorphism to C7bar or H2plus",
        )
    )
    # Clique-family comparison rows: K_{r+1}-free graphs.
    for r in (2, 3, 4):
        rows.append(
            ThresholdEntry(
                f"K{r + 1}-free", r, 1, r, 1 - Fraction(1, r - Fraction(1, 3)), None,
                PROVEN_EXACT, f"{r}-colourable",
            )
        )
        rows.append(
            ThresholdEntry(
                f"K{r + 1}-free", r, 1, None, 1 - Fraction(1, r - Fraction(1, 2)), None,
                PROVEN_EXACT, "bounded chromatic number",
            )
        )
    return tuple(rows)


THRESHOLD_TABLE = build_table()


def consistency_problems() -> list[str]:
    """Internal cross-checks: ranges, the gamma identity, known anchor values."""
    problems = []
    for row in THRESHOLD_TABLE:
        if row.threshold is not None and not 0 <= row.threshold <= 1:
            problems.append(f"{row.family}: threshold {row.threshold} outside [0,1]")
        if row.gamma is not None and row.threshold is not None:
            l = row.a + row.b - 1
            recomputed = 1 - Fraction(1, l + row.gamma)
            if recomputed != row.threshold:
                problems.append(
                    f"{row.family} k={row.colours}: stored {row.threshold} != 1 - 1/(l + gamma) = {recomputed}"
                )
    anchors = [
        (_fab(1, 2), 3, Fraction(4, 7)),
        (_fab(2, 2), 4, 1 - Fraction(3, 10)),
        (_fab(1, 3), 4, 1 - Fraction(7, 22)),
    ]
    for family, colours, expected in anchors:
        hits = [
            row
            for row in THRESHOLD_TABLE
            if row.family == family and row.colours == colours and row.threshold == expected
        ]
        if not hits:
            problems.append(f"missing anchor row {family} k={colours} threshold {expected}")
    return problems
