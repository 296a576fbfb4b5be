"""Per-team average scouting return, a normality check of the team gains,
and a split-half consistency correlation across early and late drafts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .cescin import CssOrdering
from .core_model import DraftClass, Metric
from .numerics import SmoothCurve, TestResult, pearson, shapiro_wilk
from .valuation import metric_differential


@dataclass(frozen=True)
class TeamGain:
    """One team's pick count and mean realized surplus per metric."""

    team: str
    picks: int
    mean_gain: Mapping[Metric, float]


def team_gains(
    classes: Sequence[DraftClass],
    css_orderings: Mapping[int, CssOrdering],
    css_curves: Mapping[Metric, SmoothCurve],
    years: Optional[Sequence[int]] = None,
) -> list[TeamGain]:
    """Average realized surplus (outcome minus scouting expectation) per team
    per pick. Averaging, rather than totals, keeps teams with fewer drafts
    comparable to the rest of the league.
    """
    sums: dict[str, dict[Metric, float]] = {}
    counts: dict[str, int] = {}
    for dc in classes:
        if years is not None and dc.year not in years:
            continue
        css = css_orderings[dc.year]
        for i, r in enumerate(dc.records):
            rank = css.css_ranks[i]
            counts[r.team] = counts.get(r.team, 0) + 1
            per_metric = sums.setdefault(r.team, {m: 0.0 for m in css_curves})
            for metric, curve in css_curves.items():
                per_metric[metric] += metric_differential(r, curve, rank, metric)
    return [
        TeamGain(
            team=team,
            picks=counts[team],
            mean_gain={m: s / counts[team] for m, s in sums[team].items()},
        )
        for team in sorted(counts)
    ]


def normality_check(gains: Sequence[TeamGain], metric: Metric) -> TestResult:
    """Shapiro-Wilk over the team mean gains for one metric."""
    if len(gains) < 3:
        raise ValueError("need at least 3 teams")
    return shapiro_wilk([g.mean_gain[metric] for g in gains])


def split_half_correlation(
    classes: Sequence[DraftClass],
    css_orderings: Mapping[int, CssOrdering],
    css_curves: Mapping[Metric, SmoothCurve],
    early_years: Sequence[int],
    late_years: Sequence[int],
) -> dict[Metric, TestResult]:
    """Correlation across teams between mean gains in the early and late
    year halves; teams missing from either half are excluded."""
    early = {g.team: g for g in team_gains(classes, css_orderings, css_curves, early_years)}
    late = {g.team: g for g in team_gains(classes, css_orderings, css_curves, late_years)}
    common = sorted(set(early) & set(late))
    if len(common) < 3:
        raise ValueError("need at least 3 teams with picks in both halves")
    out = {}
    for metric in css_curves:
        x = [early[t].mean_gain[metric] for t in common]
        y = [late[t].mean_gain[metric] for t in common]
        out[metric] = pearson(x, y)
    return out


def outlier_teams(gains: Sequence[TeamGain], metric: Metric, z: float = 3.0) -> list[str]:
    """Teams whose mean gain sits beyond z standard deviations of the
    cross-team mean; reported, never asserted."""
    values = np.array([g.mean_gain[metric] for g in gains])
    mu, sd = values.mean(), values.std(ddof=1)
    if sd == 0:
        return []
    return [g.team for g, v in zip(gains, values) if abs(v - mu) > z * sd]


def permutation_spread_test(
    classes: Sequence[DraftClass],
    css_orderings: Mapping[int, CssOrdering],
    css_curves: Mapping[Metric, SmoothCurve],
    metric: Metric,
    n_permutations: int = 500,
    seed: int = 0,
) -> TestResult:
    """Optional diagnostic: shuffle players over teams keeping pick counts
    fixed and compare the observed spread of team means against the shuffled
    distribution. The statistic is the cross-team standard deviation; the
    p-value is the fraction of shuffles with at least that spread.
    """
    rng = np.random.default_rng(seed)
    teams, diffs = [], []
    for dc in classes:
        css = css_orderings[dc.year]
        for i, r in enumerate(dc.records):
            teams.append(r.team)
            diffs.append(metric_differential(r, css_curves[metric], css.css_ranks[i], metric))
    teams = np.array(teams)
    diffs = np.array(diffs)

    def spread(assignment):
        out = []
        for t in np.unique(teams):
            out.append(diffs[assignment == t].mean())
        return np.std(out, ddof=1)

    observed = spread(teams)
    hits = 0
    for _ in range(n_permutations):
        hits += spread(rng.permutation(teams)) >= observed
    return TestResult(statistic=float(observed), p_value=(hits + 1) / (n_permutations + 1))
