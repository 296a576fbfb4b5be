"""Replaying a draft pick by pick.

Each pick is compared against every still-available player at the same
position.  A pick is "optimal" if nobody available went on to a better
seven-year career by the chosen metric, and "nearly optimal" if it came
within half a standard deviation of the best.  The replay runs under two
orderings: the order teams actually picked, and the order implied by the
integrated central-scouting ranks.

Run with:  python3 demos/03_draft_audit.py
"""

from draftvalue.config import RunConfig
from draftvalue.core_model import Metric
from draftvalue.draft_audit import Ordering, audit, half_sd_thresholds, replay_flags
from draftvalue.pipeline import build_orderings
from draftvalue.synth import SynthConfig, generate_synthetic_draft

classes = generate_synthetic_draft(SynthConfig(seed=3, years=5))
_, orderings = build_orderings(classes, RunConfig())

# a small hand inspection: first ten picks of the first class, by games played
dc = classes[0]
half_sd = half_sd_thresholds(classes, [Metric.GP])[Metric.GP]
flags = replay_flags(dc, Ordering.TEAM, Metric.GP, half_sd=half_sd)
print(f"first ten picks of {dc.year}, games-played metric "
      f"(half-SD threshold {half_sd:.1f}):")
for f in flags[:10]:
    tag = "optimal" if f.optimal else ("nearly" if f.nearly_optimal else "-")
    print(f"  pick {f.pick_number:>3} (selection {f.selection:>3}): {tag}")

# the full table: metric x ordering x round band
report = audit(classes, orderings)
print("\npercent of picks flagged:")
print(f"{'metric':>6} {'order':>6} {'rounds':>7} {'optimal':>8} {'nearly':>8}")
for row in report.rows():
    print(f"{row['metric']:>6} {row['ordering']:>6} {row['rounds']:>7} "
          f"{row['optimal_pct']:8.1f} {row['nearly_optimal_pct']:8.1f}")
