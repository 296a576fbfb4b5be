"""The two smoothers behind every curve in the package.

Shows local-linear loess with tricube weights recovering a noisy signal,
and the pool-adjacent-violators fit that forces a curve to be
non-increasing (used for the pick value chart).

Run with:  python3 demos/02_smoothing.py
"""

import numpy as np

from draftvalue.numerics import antitonic_fit, loess_fit, pearson, shapiro_wilk

rng = np.random.default_rng(42)

# --- loess on a noisy decaying curve -----------------------------------
x = rng.uniform(0, 10, 200)
truth = 50 * np.exp(-x / 4)
y = truth + rng.normal(0, 3, x.size)

grid = np.linspace(0, 10, 11)
curve = loess_fit(x, y, grid=grid, span=0.5)
print("loess fit of y = 50*exp(-x/4) + noise:")
print(f"{'x':>6} {'truth':>8} {'loess':>8}")
for g, v in zip(grid, curve.values):
    print(f"{g:6.1f} {50 * np.exp(-g / 4):8.2f} {v:8.2f}")

# loess reproduces straight lines exactly, at any span
line = loess_fit(x, 3 * x + 2, grid=grid, span=0.3)
print(f"\nmax error on an exact line: {np.max(np.abs(line.values - (3 * grid + 2))):.2e}")

# --- antitonic (non-increasing) regression -----------------------------
xs = np.arange(10.0)
ys = np.array([9.0, 8.5, 9.2, 6.0, 6.5, 4.0, 4.2, 3.9, 1.0, 1.5])
fit = antitonic_fit(xs, ys)
print("\nantitonic fit pools adjacent violations into flat blocks:")
print("  raw:", ys.tolist())
print("  fit:", [round(float(v), 3) for v in fit.values])
assert all(b <= a + 1e-12 for a, b in zip(fit.values, fit.values[1:]))

# --- the two statistical tests -----------------------------------------
sample = rng.normal(size=30)
sw = shapiro_wilk(sample)
print(f"\nShapiro-Wilk on a normal sample: W = {sw.statistic:.4f}, p = {sw.p_value:.3f}")

a = rng.normal(size=50)
b = 0.6 * a + rng.normal(0, 0.8, 50)
r = pearson(a, b)
print(f"Pearson correlation of related series: r = {r.statistic:.3f}, p = {r.p_value:.2e}")
