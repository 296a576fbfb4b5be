"""Replay drafts under the team and integrated-scouting orderings and score
how often each pick was the best, or nearly the best, player still available
at the same position."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .cescin import CssOrdering
from .core_model import DraftClass, Metric, pooled_metric


class Ordering(enum.Enum):
    TEAM = "team"
    CSS = "css"


@dataclass(frozen=True)
class PickFlag:
    """Audit outcome of one pick in a replay.

    ``pick_number`` is the 1-based position within the replay ordering;
    ``selection`` is the player's actual draft slot.
    """

    pick_number: int
    selection: int
    optimal: bool
    nearly_optimal: bool

    def __post_init__(self):
        if self.optimal and not self.nearly_optimal:
            raise ValueError("optimal pick must also be nearly optimal")


ROUND_BANDS = ("all", "1-3", "4-7")


@dataclass(frozen=True)
class AuditCell:
    picks: int
    optimal_pct: float
    nearly_optimal_pct: float


@dataclass(frozen=True)
class AuditReport:
    """Optimal / nearly-optimal percentages per metric x ordering x round band."""

    cells: Mapping[tuple[Metric, Ordering, str], AuditCell]
    half_sd: Mapping[Metric, float]

    def cell(self, metric: Metric, ordering: Ordering, band: str = "all") -> AuditCell:
        return self.cells[(metric, ordering, band)]

    def rows(self) -> list[dict]:
        out = []
        for (metric, ordering, band), cell in self.cells.items():
            out.append(
                {
                    "metric": metric.value,
                    "ordering": ordering.value,
                    "rounds": band,
                    "picks": cell.picks,
                    "optimal_pct": cell.optimal_pct,
                    "nearly_optimal_pct": cell.nearly_optimal_pct,
                }
            )
        return out


def replay_order(dc: DraftClass, ordering: Ordering, css: Optional[CssOrdering]) -> list[int]:
    """Record indices in the order picks are replayed."""
    idx = list(range(len(dc.records)))
    if ordering is Ordering.TEAM:
        return idx
    if css is None:
        raise ValueError("CSS replay requires a CssOrdering")
    return sorted(idx, key=lambda i: css.css_ranks[i])


def replay_flags(
    dc: DraftClass,
    ordering: Ordering,
    metric: Metric,
    half_sd: float,
    css: Optional[CssOrdering] = None,
) -> list[PickFlag]:
    """Walk the draft in the given ordering, flagging each pick against the
    best same-position player still available (the picked player included).

    Ties at the maximum count as optimal.
    """
    if half_sd <= 0:
        raise ValueError("half_sd must be positive")
    order = replay_order(dc, ordering, css)
    remaining = set(order)
    flags = []
    for pick_number, i in enumerate(order, start=1):
        picked = dc.records[i]
        best = max(
            dc.records[j].metric(metric)
            for j in remaining
            if dc.records[j].position is picked.position
        )
        value = picked.metric(metric)
        flags.append(
            PickFlag(
                pick_number=pick_number,
                selection=picked.selection,
                optimal=value >= best,
                nearly_optimal=value >= best - half_sd,
            )
        )
        remaining.remove(i)
    return flags


def half_sd_thresholds(classes: Sequence[DraftClass], metrics: Iterable[Metric]) -> dict[Metric, float]:
    """Half of the pooled standard deviation (n-1 denominator) per metric."""
    out = {}
    for metric in metrics:
        values = pooled_metric(classes, metric)
        if values.size < 2:
            raise ValueError("need at least 2 records")
        out[metric] = float(np.std(values, ddof=1)) / 2.0
    return out


def audit(
    classes: Sequence[DraftClass],
    css_orderings: Mapping[int, CssOrdering],
    metrics: Sequence[Metric] = tuple(Metric),
    band_edge: int = 90,
    half_sd: Optional[Mapping[Metric, float]] = None,
) -> AuditReport:
    """Aggregate replay flags over all years into per-cell percentages.

    Round bands split at ``band_edge`` picks into the replay (the default 90
    is three 30-pick rounds).
    """
    if half_sd is None:
        half_sd = half_sd_thresholds(classes, metrics)
    cells = {}
    for metric in metrics:
        for ordering in Ordering:
            flags: list[PickFlag] = []
            for dc in classes:
                css = css_orderings.get(dc.year) if ordering is Ordering.CSS else None
                flags.extend(replay_flags(dc, ordering, metric, half_sd[metric], css))
            for band in ROUND_BANDS:
                if band == "1-3":
                    sel = [f for f in flags if f.pick_number <= band_edge]
                elif band == "4-7":
                    sel = [f for f in flags if f.pick_number > band_edge]
                else:
                    sel = flags
                n = len(sel)
                cells[(metric, ordering, band)] = AuditCell(
                    picks=n,
                    optimal_pct=100.0 * sum(f.optimal for f in sel) / n if n else 0.0,
                    nearly_optimal_pct=100.0 * sum(f.nearly_optimal for f in sel) / n if n else 0.0,
                )
    return AuditReport(cells=cells, half_sd=dict(half_sd))
