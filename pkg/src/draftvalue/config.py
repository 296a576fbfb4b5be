"""Run configuration and its flat key/value file format.

Config files hold one ``section.key = value`` pair per line; ``#`` starts a
comment. Unknown keys are rejected so typos fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Union

from .core_model import ImputationConfig, Metric
from .valuation import DollarConstants, LoessConfig


def _year_range(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "-" in text:
        lo, hi = text.split("-", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(p) for p in text.split(",") if p.strip())


@dataclass(frozen=True)
class RunConfig:
    loess: LoessConfig = LoessConfig()
    factors: dict[str, float] = field(default_factory=dict)  # cescin overrides
    band_edge: int = 90
    dollars: DollarConstants = DollarConstants()
    imputation: ImputationConfig = ImputationConfig()
    split_early: tuple[int, ...] = (1998, 1999, 2000)
    split_late: tuple[int, ...] = (2001, 2002)
    metrics: tuple[Metric, ...] = tuple(Metric)
    by_position: bool = False


_FACTOR_KEYS = {"na_skater", "na_goalie", "eu_skater", "eu_goalie"}


def parse_config_text(text: str, base: Optional[RunConfig] = None) -> RunConfig:
    cfg = base or RunConfig()
    loess = cfg.loess
    dollars = cfg.dollars
    imputation = cfg.imputation
    factors = dict(cfg.factors)
    updates: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "loess.span":
            loess = replace(loess, span=float(value))
        elif key == "loess.degree":
            loess = replace(loess, degree=int(value))
        elif key.startswith("cescin.") and key[7:] in _FACTOR_KEYS:
            factors[key[7:]] = float(value)
        elif key == "audit.band_edge":
            updates["band_edge"] = int(value)
        elif key == "dollars.salary_per_game":
            dollars = replace(dollars, salary_per_game=float(value))
        elif key == "dollars.dollars_per_goal":
            dollars = replace(dollars, dollars_per_goal=float(value))
        elif key == "dollars.minutes_per_game":
            dollars = replace(dollars, minutes_per_game=float(value))
        elif key == "dollars.picks_per_season":
            dollars = replace(dollars, picks_per_season=int(value))
        elif key == "impute.never_played_gvt":
            imputation = replace(imputation, never_played_gvt=float(value))
        elif key == "impute.goalie_minutes_per_game":
            imputation = replace(imputation, goalie_minutes_per_game=float(value))
        elif key == "split.early":
            updates["split_early"] = _year_range(value)
        elif key == "split.late":
            updates["split_late"] = _year_range(value)
        elif key == "metrics":
            updates["metrics"] = tuple(
                Metric(v.strip().lower()) for v in value.split(",") if v.strip()
            )
        elif key == "by_position":
            updates["by_position"] = value.lower() in ("1", "true", "yes")
        else:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
    return replace(
        cfg, loess=loess, dollars=dollars, imputation=imputation, factors=factors, **updates
    )


def load_config(path: Union[str, Path], base: Optional[RunConfig] = None) -> RunConfig:
    return parse_config_text(Path(path).read_text(encoding="utf-8"), base)
