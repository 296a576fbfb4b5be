"""Expected-performance curves per ordering, rank/metric differentials, the
per-pick surplus from team scouting, its dollar conversion, and the monotone
draft value pick chart."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .cescin import CssOrdering
from .core_model import DraftClass, Metric, PlayerRecord, PositionGroup, position_group
from .draft_audit import Ordering
from .numerics import SmoothCurve, antitonic_fit, loess_fit

SELECTION_GRID = np.arange(1, 211, dtype=float)


@dataclass(frozen=True)
class LoessConfig:
    span: float = 0.5
    degree: int = 1


@dataclass(frozen=True)
class DifferentialPoint:
    """One player's rank differential (selection minus integrated rank) and
    outcome surplus over the scouting expectation at his rank."""

    delta_rank: int
    delta_metric: float


@dataclass(frozen=True)
class DollarConstants:
    """Published conversion constants between the outcome metrics and dollars."""

    salary_per_game: float = 29300.0
    dollars_per_goal: float = 1_000_000.0 / 3.0
    minutes_per_game: float = 20.0
    picks_per_season: int = 7

    def __post_init__(self):
        if min(self.salary_per_game, self.dollars_per_goal, self.minutes_per_game, self.picks_per_season) <= 0:
            raise ValueError("dollar constants must be positive")


@dataclass(frozen=True)
class GainEstimate:
    """Average scouting surplus per pick, per draft, and in dollars."""

    metric: Metric
    per_pick: float
    per_draft: float
    dollars: float


@dataclass(frozen=True)
class ValueChart:
    """210 pick values, scaled to 1000 at the first selection and
    non-increasing down the draft."""

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 210:
            raise ValueError(f"chart must have 210 entries, got {len(self.values)}")
        if self.values[0] != 1000:
            raise ValueError(f"value at pick 1 must be 1000, got {self.values[0]}")
        if any(b > a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("chart values must be non-increasing")
        if any(v < 0 for v in self.values):
            raise ValueError("chart values must be non-negative")

    def value(self, selection: int) -> int:
        return self.values[selection - 1]

    def rows(self) -> list[tuple[int, int]]:
        return [(i + 1, v) for i, v in enumerate(self.values)]


def _rank_metric_pairs(
    classes: Sequence[DraftClass],
    css_orderings: Mapping[int, CssOrdering],
    ordering: Ordering,
    metric: Metric,
    group: Optional[PositionGroup] = None,
) -> tuple[np.ndarray, np.ndarray]:
    ranks, values = [], []
    for dc in classes:
        css = css_orderings.get(dc.year)
        for i, r in enumerate(dc.records):
            if group is not None and position_group(r.position) is not group:
                continue
            if ordering is Ordering.TEAM:
                ranks.append(r.selection)
            else:
                if css is None:
                    raise ValueError(f"no CSS ordering for year {dc.year}")
                ranks.append(css.css_ranks[i])
            values.append(r.metric(metric))
    return np.array(ranks, dtype=float), np.array(values, dtype=float)


def expected_curve(
    classes: Sequence[DraftClass],
    css_orderings: Mapping[int, CssOrdering],
    ordering: Ordering,
    metric: Metric,
    loess: LoessConfig = LoessConfig(),
    group: Optional[PositionGroup] = None,
) -> SmoothCurve:
    """Smoothed expected metric at each of the 210 draft ranks, pooling
    (rank, outcome) pairs across years under the chosen ordering."""
    ranks, values = _rank_metric_pairs(classes, css_orderings, ordering, metric, group)
    return loess_fit(ranks, values, grid=SELECTION_GRID, span=loess.span, degree=loess.degree)


def rank_differential(selection: int, css_rank: int) -> int:
    """Actual slot minus integrated scouting rank; negative means the team
    reached ahead of the scouting consensus."""
    if selection < 1 or css_rank < 1:
        raise ValueError("ranks are 1-based")
    return selection - css_rank


def metric_differential(record: PlayerRecord, css_curve: SmoothCurve, css_rank: int, metric: Metric) -> float:
    """Realized outcome minus the expectation at the player's scouting rank."""
    return record.metric(metric) - css_curve(css_rank)


def differential_points(
    classes: Sequence[DraftClass],
    css_orderings: Mapping[int, CssOrdering],
    css_curve: SmoothCurve,
    metric: Metric,
    group: Optional[PositionGroup] = None,
) -> list[DifferentialPoint]:
    """Per-player (delta rank, delta metric) pairs across all classes."""
    out = []
    for dc in classes:
        css = css_orderings[dc.year]
        for i, r in enumerate(dc.records):
            if group is not None and position_group(r.position) is not group:
                continue
            rank = css.css_ranks[i]
            out.append(
                DifferentialPoint(
                    delta_rank=rank_differential(r.selection, rank),
                    delta_metric=metric_differential(r, css_curve, rank, metric),
                )
            )
    return out


def fit_differential_curve(
    points: Sequence[DifferentialPoint], loess: LoessConfig = LoessConfig()
) -> SmoothCurve:
    """Smooth the outcome surplus as a function of rank differential over the
    observed differential range."""
    if len(points) < 10:
        raise ValueError("need at least 10 differential points")
    dr = np.array([p.delta_rank for p in points], dtype=float)
    dm = np.array([p.delta_metric for p in points], dtype=float)
    if dr.min() >= 0 or dr.max() <= 0:
        raise ValueError("differential points must span negative and positive delta_rank")
    grid = np.arange(math.floor(dr.min()), math.ceil(dr.max()) + 1, dtype=float)
    return loess_fit(dr, dm, grid=grid, span=loess.span, degree=loess.degree)


def average_gain(curve: SmoothCurve, delta_ranks: Iterable[int]) -> float:
    """Average metric surplus per pick implied by the differential curve.

    Evaluates the curve at each pick's own differential; picks with zero
    differential contribute only to the denominator. The sign is fixed so a
    negatively-sloped curve (teams successfully deviating from the scouting
    order) yields a positive gain.
    """
    delta_ranks = list(delta_ranks)
    n = len(delta_ranks)
    if n == 0:
        raise ValueError("no selections")
    neg = sum(curve(d) for d in delta_ranks if d < 0)
    pos = sum(curve(d) for d in delta_ranks if d > 0)
    return (neg - pos) / n


def to_dollars(gain_per_draft: float, metric: Metric, constants: DollarConstants = DollarConstants()) -> float:
    """Convert a per-draft metric gain to dollars using the published
    salary-per-game, dollars-per-goal and minutes-per-game constants."""
    if metric is Metric.GP:
        return gain_per_draft * constants.salary_per_game
    if metric is Metric.GVT:
        return gain_per_draft * constants.dollars_per_goal
    if metric is Metric.TOI:
        return gain_per_draft / constants.minutes_per_game * constants.salary_per_game
    raise ValueError(f"unknown metric {metric}")


def gain_estimate(
    curve: SmoothCurve,
    delta_ranks: Iterable[int],
    metric: Metric,
    constants: DollarConstants = DollarConstants(),
) -> GainEstimate:
    per_pick = average_gain(curve, delta_ranks)
    per_draft = per_pick * constants.picks_per_season
    return GainEstimate(
        metric=metric,
        per_pick=per_pick,
        per_draft=per_draft,
        dollars=to_dollars(per_draft, metric, constants),
    )


def draft_value_chart(
    classes: Sequence[DraftClass], loess: LoessConfig = LoessConfig()
) -> ValueChart:
    """Build the pick chart: smooth TOI against selection, force the curve
    non-increasing, then scale to 1000 at pick 1 with half-up rounding."""
    sels, toi = [], []
    for dc in classes:
        for r in dc.records:
            sels.append(r.selection)
            toi.append(r.toi7)
    smoothed = loess_fit(
        np.array(sels, dtype=float), np.array(toi, dtype=float),
        grid=SELECTION_GRID, span=loess.span, degree=loess.degree,
    )
    mono = antitonic_fit(SELECTION_GRID, smoothed.values)
    # smoothing can undershoot below zero in the tail; expected minutes are
    # non-negative, so floor the curve before scaling
    levels = np.maximum(mono(SELECTION_GRID), 0.0)
    top = levels[0]
    if top <= 0:
        raise ValueError("non-positive top value")
    values = tuple(int(math.floor(1000.0 * v / top + 0.5)) for v in levels)
    return ValueChart(values=values)
