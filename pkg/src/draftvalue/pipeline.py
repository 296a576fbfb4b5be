"""End-to-end orchestration: scouting ordering, audit, expectation curves,
surplus estimation, dollar conversion, value chart and team analysis, with
all artifacts written to an output directory."""

from __future__ import annotations

import csv
import json
import logging
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .cescin import CategoryFactors, CssOrdering, estimate_category_factors, css_ordering
from .config import RunConfig
from .core_model import DraftClass, Metric, PositionGroup
from .draft_audit import Ordering, audit
from .numerics import SmoothCurve
from .team_analysis import (
    normality_check,
    outlier_teams,
    split_half_correlation,
    team_gains,
)
from .valuation import (
    DifferentialPoint,
    GainEstimate,
    differential_points,
    draft_value_chart,
    expected_curve,
    fit_differential_curve,
    gain_estimate,
)

logger = logging.getLogger("draftvalue")


class PipelineError(RuntimeError):
    """Failure in a named pipeline stage."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage {stage}: {cause}")
        self.stage = stage
        self.cause = cause


def build_orderings(
    classes: Sequence[DraftClass], config: RunConfig
) -> tuple[CategoryFactors, dict[int, CssOrdering]]:
    factors = estimate_category_factors(classes, overrides=config.factors)
    return factors, {dc.year: css_ordering(dc, factors) for dc in classes}


def css_curves(
    classes: Sequence[DraftClass],
    orderings: Mapping[int, CssOrdering],
    config: RunConfig,
    group: Optional[PositionGroup] = None,
) -> dict[Metric, SmoothCurve]:
    return {
        m: expected_curve(classes, orderings, Ordering.CSS, m, config.loess, group)
        for m in config.metrics
    }


def surplus_for_metric(
    classes: Sequence[DraftClass],
    orderings: Mapping[int, CssOrdering],
    curve: SmoothCurve,
    metric: Metric,
    config: RunConfig,
    group: Optional[PositionGroup] = None,
) -> tuple[list[DifferentialPoint], Optional[SmoothCurve], GainEstimate]:
    """Differential points, the fitted surplus curve, and the gain estimate.

    When the team and scouting orderings coincide (all rank differentials
    zero) no curve can be fitted and the gain is exactly zero.
    """
    points = differential_points(classes, orderings, curve, metric, group)
    deltas = [p.delta_rank for p in points]
    if all(d == 0 for d in deltas):
        zero = GainEstimate(metric=metric, per_pick=0.0, per_draft=0.0, dollars=0.0)
        return points, None, zero
    diff_curve = fit_differential_curve(points, config.loess)
    return points, diff_curve, gain_estimate(diff_curve, deltas, metric, config.dollars)


def _write_curve_csv(path: Path, curve: SmoothCurve) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "fitted"])
        for x, v in zip(curve.grid, curve.values):
            writer.writerow([f"{x:g}", f"{v:.6f}"])


def run_pipeline(
    classes: Sequence[DraftClass],
    config: RunConfig,
    out_dir: Union[str, Path],
) -> dict[str, Path]:
    """Run every analysis stage and write artifacts; returns artifact paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "curves").mkdir(exist_ok=True)
    artifacts: dict[str, Path] = {}

    def stage(name):
        def wrap(fn):
            try:
                return fn()
            except Exception as exc:
                raise PipelineError(name, exc) from exc
        return wrap

    if not classes:
        raise PipelineError("ingest", ValueError("no draft classes supplied"))

    factors, orderings = stage("cescin")(lambda: build_orderings(classes, config))
    path = out / "cescin.json"
    path.write_text(
        json.dumps(
            {
                "factors": {
                    "na_skater": factors.na_skater,
                    "na_goalie": factors.na_goalie,
                    "eu_skater": factors.eu_skater,
                    "eu_goalie": factors.eu_goalie,
                },
                "years": sorted(orderings),
            },
            indent=2,
        )
    )
    artifacts["cescin"] = path

    report = stage("audit")(
        lambda: audit(classes, orderings, config.metrics, band_edge=config.band_edge)
    )
    path = out / "audit.json"
    path.write_text(
        json.dumps(
            {
                "half_sd": {m.value: v for m, v in report.half_sd.items()},
                "cells": report.rows(),
            },
            indent=2,
        )
    )
    artifacts["audit"] = path
    path = out / "audit.csv"
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(
            fh,
            fieldnames=["metric", "ordering", "rounds", "picks", "optimal_pct", "nearly_optimal_pct"],
        )
        writer.writeheader()
        writer.writerows(report.rows())
    artifacts["audit_csv"] = path

    curves: dict[tuple[Ordering, Metric], SmoothCurve] = {}

    def fit_curves():
        for ordering in Ordering:
            for metric in config.metrics:
                curves[(ordering, metric)] = expected_curve(
                    classes, orderings, ordering, metric, config.loess
                )
    stage("curves")(fit_curves)
    for (ordering, metric), curve in curves.items():
        path = out / "curves" / f"expected_{metric.value}_{ordering.value}.csv"
        _write_curve_csv(path, curve)
        artifacts[f"curve_{metric.value}_{ordering.value}"] = path

    css_expected = {m: curves[(Ordering.CSS, m)] for m in config.metrics}
    gains = {}

    def fit_surplus():
        groups: list[Optional[PositionGroup]] = [None]
        if config.by_position:
            groups += list(PositionGroup)
        for group in groups:
            expected = (
                css_expected
                if group is None
                else css_curves(classes, orderings, config, group)
            )
            for metric in config.metrics:
                points, diff_curve, estimate = surplus_for_metric(
                    classes, orderings, expected[metric], metric, config, group
                )
                key = metric.value if group is None else f"{metric.value}_{group.value.lower()}"
                gains[key] = estimate
                if diff_curve is not None:
                    cpath = out / "curves" / f"differential_{key}.csv"
                    _write_curve_csv(cpath, diff_curve)
                    artifacts[f"differential_{key}"] = cpath
    stage("surplus")(fit_surplus)
    path = out / "gains.json"
    path.write_text(
        json.dumps(
            {
                key: {
                    "metric": est.metric.value,
                    "per_pick": est.per_pick,
                    "per_draft": est.per_draft,
                    "dollars": est.dollars,
                }
                for key, est in gains.items()
            },
            indent=2,
        )
    )
    artifacts["gains"] = path

    chart = stage("chart")(lambda: draft_value_chart(classes, config.loess))
    path = out / "chart.csv"
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["selection", "value"])
        writer.writerows(chart.rows())
    artifacts["chart"] = path

    def run_teams():
        gains_by_team = team_gains(classes, orderings, css_expected)
        path = out / "teams.csv"
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["team", "picks"] + [f"mean_gain_{m.value}" for m in config.metrics])
            for g in gains_by_team:
                writer.writerow(
                    [g.team, g.picks] + [f"{g.mean_gain[m]:.4f}" for m in config.metrics]
                )
        artifacts["teams"] = path

        tests: dict = {"normality": {}, "split_half": {}, "outliers": {}}
        for metric in config.metrics:
            try:
                res = normality_check(gains_by_team, metric)
                tests["normality"][metric.value] = {"W": res.statistic, "p": res.p_value}
            except ValueError as exc:
                tests["normality"][metric.value] = {"error": str(exc)}
            tests["outliers"][metric.value] = outlier_teams(gains_by_team, metric)
        years = {dc.year for dc in classes}
        if years & set(config.split_early) and years & set(config.split_late):
            try:
                split = split_half_correlation(
                    classes, orderings, css_expected, config.split_early, config.split_late
                )
                tests["split_half"] = {
                    m.value: {"r": res.statistic, "p": res.p_value} for m, res in split.items()
                }
            except ValueError as exc:
                tests["split_half"] = {"error": str(exc)}
        else:
            logger.info("split-half skipped: data years do not cover both halves")
        tpath = out / "team_tests.json"
        tpath.write_text(json.dumps(tests, indent=2))
        artifacts["team_tests"] = tpath
    stage("teams")(run_teams)

    return artifacts
