"""Numerical core: local-linear LOESS, weighted antitonic regression via
pool-adjacent-violators, the Shapiro-Wilk normality test (Royston's AS R94
approximation) and Pearson correlation with a t-based p-value.

All fits are pure functions of their inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr, ndtri, stdtr


@dataclass(frozen=True)
class TestResult:
    """Test statistic plus its p-value."""

    statistic: float
    p_value: float

    def __post_init__(self):
        if not (0.0 <= self.p_value <= 1.0):
            raise ValueError(f"p-value {self.p_value} outside [0, 1]")


@dataclass(frozen=True)
class SmoothCurve:
    """Fitted values on a grid, evaluable at arbitrary x.

    LOESS curves interpolate linearly between grid points; antitonic curves
    are step functions on the pooled levels. Both extrapolate as constants
    beyond the grid.
    """

    kind: str  # "loess" or "antitonic"
    grid: np.ndarray
    values: np.ndarray

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "antitonic":
            idx = np.clip(np.searchsorted(self.grid, x, side="right") - 1, 0, len(self.grid) - 1)
            out = self.values[idx]
        else:
            out = np.interp(x, self.grid, self.values)
        return float(out) if out.ndim == 0 else out


def _as_weighted(x, y, w):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if w is None:
        w = np.ones_like(x)
    else:
        w = np.asarray(w, dtype=float)
    if not (x.shape == y.shape == w.shape):
        raise ValueError("x, y, w must have equal shapes")
    if np.any(w <= 0):
        raise ValueError("weights must be positive")
    return x, y, w


def tricube(u: np.ndarray) -> np.ndarray:
    """Tricube kernel (1 - u^3)^3 on [0, 1], zero outside."""
    u = np.clip(np.abs(u), 0.0, 1.0)
    return (1.0 - u**3) ** 3


def loess_fit(x, y, grid, span: float = 0.5, degree: int = 1, w=None) -> SmoothCurve:
    """Local-linear smoother with tricube neighborhood weights.

    At each grid point the q = ceil(span*n) nearest data points by distance
    get tricube weights scaled by the distance to the q-th nearest, and a
    weighted degree-1 polynomial is fit and evaluated there. If every
    neighbor shares one x (degenerate design) the local weighted mean is
    used instead. No robustness iterations.
    """
    if degree != 1:
        raise ValueError("only degree 1 (local linear) is supported")
    if not (0.0 < span <= 1.0):
        raise ValueError("span must be in (0, 1]")
    x, y, w = _as_weighted(x, y, w)
    n = len(x)
    if len(np.unique(x)) < degree + 2:
        raise ValueError("need at least 3 distinct x values")
    q = int(math.ceil(span * n))
    if q < degree + 1:
        raise ValueError(f"span*n = {span * n:.2f} gives fewer than {degree + 1} local points")
    grid = np.asarray(grid, dtype=float)
    fitted = np.empty_like(grid)
    for j, x0 in enumerate(grid):
        d = np.abs(x - x0)
        if q < n:
            local = np.argpartition(d, q - 1)[:q]
        else:
            local = np.arange(n)
        dmax = d[local].max()
        if dmax == 0.0:
            kw = np.ones(len(local))
        else:
            kw = tricube(d[local] / dmax)
        lw = kw * w[local]
        keep = lw > 0
        lw = lw[keep]
        xl = x[local][keep]
        yl = y[local][keep]
        fitted[j] = _local_linear(xl, yl, lw, x0)
    if not np.all(np.isfinite(fitted)):
        raise ValueError("non-finite fitted value")
    return SmoothCurve(kind="loess", grid=grid, values=fitted)


def _local_linear(xl, yl, lw, x0):
    """Weighted least-squares line through the local points, evaluated at x0.

    Centering at x0 makes the intercept the fitted value and keeps the solve
    well conditioned at the grid boundaries.
    """
    sw = lw.sum()
    mean = float(np.dot(lw, yl) / sw)
    xc = xl - x0
    s1 = np.dot(lw, xc)
    s2 = np.dot(lw, xc * xc)
    t0 = np.dot(lw, yl)
    t1 = np.dot(lw, xc * yl)
    denom = sw * s2 - s1 * s1
    spread = s2 / sw - (s1 / sw) ** 2
    if spread <= 1e-12 * max(1.0, np.max(np.abs(xc)) ** 2):
        return mean
    return float((s2 * t0 - s1 * t1) / denom)


def _aggregate_ties(x, y, w):
    """Collapse duplicate x to a single point with summed weight and
    weighted-mean y; returns arrays sorted by x."""
    order = np.argsort(x, kind="stable")
    x, y, w = x[order], y[order], w[order]
    ux, start = np.unique(x, return_index=True)
    if len(ux) == len(x):
        return x, y, w
    bounds = np.append(start, len(x))
    ay = np.empty(len(ux))
    aw = np.empty(len(ux))
    for i in range(len(ux)):
        sl = slice(bounds[i], bounds[i + 1])
        aw[i] = w[sl].sum()
        ay[i] = np.dot(w[sl], y[sl]) / aw[i]
    return ux, ay, aw


def pava_nondecreasing(y: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Weighted least-squares non-decreasing fit by pool-adjacent-violators."""
    levels: list[float] = []
    weights: list[float] = []
    counts: list[int] = []
    for yi, wi in zip(y, w):
        levels.append(float(yi))
        weights.append(float(wi))
        counts.append(1)
        while len(levels) > 1 and levels[-2] >= levels[-1]:
            wtot = weights[-2] + weights[-1]
            merged = (weights[-2] * levels[-2] + weights[-1] * levels[-1]) / wtot
            levels[-2:] = [merged]
            weights[-2:] = [wtot]
            counts[-2:] = [counts[-2] + counts[-1]]
    return np.repeat(levels, counts)


def antitonic_fit(x, y, w=None) -> SmoothCurve:
    """Weighted least-squares non-increasing fit.

    Duplicate x are pre-aggregated; the fit is PAVA on the negated values.
    """
    x, y, w = _as_weighted(x, y, w)
    x, y, w = _aggregate_ties(x, y, w)
    if len(x) < 2:
        raise ValueError("need at least 2 distinct x values")
    fitted = -pava_nondecreasing(-y, w)
    return SmoothCurve(kind="antitonic", grid=x, values=fitted)


# Royston (1995) polynomial coefficients for the Shapiro-Wilk approximation.
_C1 = [-2.706056, 4.434685, -2.071190, -0.147981, 0.221157, 0.0]
_C2 = [-3.582633, 5.682633, -1.752461, -0.293762, 0.042981, 0.0]
_SMALL_N_MU = [-0.0006714, 0.025054, -0.39978, 0.544]
_SMALL_N_LOGSIG = [-0.0020322, 0.062767, -0.77857, 1.3822]
_LARGE_N_MU = [0.0038915, -0.083751, -0.31082, -1.5861]
_LARGE_N_LOGSIG = [0.0030302, -0.082676, -0.4803]
_GAMMA = [0.459, -2.273]
_PI6 = 1.90985931710274  # 6/pi
_STQR = 1.04719755119660  # asin(sqrt(3/4))


def _sw_coefficients(n: int) -> np.ndarray:
    """Weights for the lower half of the ordered sample."""
    half = n // 2
    if n == 3:
        return np.array([math.sqrt(0.5)])
    i = np.arange(1, half + 1)
    # magnitudes of the expected normal order statistics' Blom scores;
    # m[0] belongs to the extreme pair.
    m = -ndtri((i - 0.375) / (n + 0.25))
    summ2 = 2.0 * np.sum(m**2)
    ssumm2 = math.sqrt(summ2)
    rsn = 1.0 / math.sqrt(n)
    a = np.array(m)
    a1 = np.polyval(_C1, rsn) + m[0] / ssumm2
    if n > 5:
        a2 = np.polyval(_C2, rsn) + m[1] / ssumm2
        phi = (summ2 - 2 * m[0] ** 2 - 2 * m[1] ** 2) / (1 - 2 * a1**2 - 2 * a2**2)
        a[1] = a2
        first_free = 2
    else:
        phi = (summ2 - 2 * m[0] ** 2) / (1 - 2 * a1**2)
        first_free = 1
    a[0] = a1
    a[first_free:] = m[first_free:] / math.sqrt(phi)
    return a


def shapiro_wilk(sample) -> TestResult:
    """Shapiro-Wilk W and p-value via Royston's AS R94 approximation.

    Valid for 3 <= n <= 5000; rejects constant samples.
    """
    x = np.sort(np.asarray(sample, dtype=float))
    n = len(x)
    if n < 3 or n > 5000:
        raise ValueError(f"sample size {n} outside [3, 5000]")
    ss = np.sum((x - x.mean()) ** 2)
    if ss <= 0.0:
        raise ValueError("degenerate sample: zero variance")
    a = _sw_coefficients(n)
    half = len(a)
    # coefficients are antisymmetric: lowest order statistics get -a.
    num = np.dot(a, x[n - half :][::-1]) - np.dot(a, x[:half])
    w_stat = num**2 / ss
    w_stat = min(w_stat, 1.0)

    if n == 3:
        p = _PI6 * (math.asin(math.sqrt(w_stat)) - _STQR)
        p = min(max(p, 0.0), 1.0)
    elif n <= 11:
        gamma = np.polyval(_GAMMA, n)
        if gamma - math.log(1.0 - w_stat) <= 0.0:
            p = 1e-99
        else:
            z = (-math.log(gamma - math.log(1.0 - w_stat)) - np.polyval(_SMALL_N_MU, n)) / math.exp(
                np.polyval(_SMALL_N_LOGSIG, n)
            )
            p = float(1.0 - ndtr(z))
    else:
        u = math.log(n)
        z = (math.log(1.0 - w_stat) - np.polyval(_LARGE_N_MU, u)) / math.exp(
            np.polyval(_LARGE_N_LOGSIG, u)
        )
        p = float(1.0 - ndtr(z))
    return TestResult(statistic=float(w_stat), p_value=p)


def pearson(x, y) -> TestResult:
    """Sample correlation with a two-sided p-value from the t transform
    t = r sqrt((n-2)/(1-r^2)) on n-2 degrees of freedom."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be equal-length vectors")
    n = len(x)
    if n < 3:
        raise ValueError("need at least 3 observations")
    xd = x - x.mean()
    yd = y - y.mean()
    sx = np.dot(xd, xd)
    sy = np.dot(yd, yd)
    if sx <= 0.0 or sy <= 0.0:
        raise ValueError("degenerate sample: zero variance")
    r = float(np.dot(xd, yd) / math.sqrt(sx * sy))
    r = min(1.0, max(-1.0, r))
    if 1.0 - r * r <= 0.0:
        p = 0.0
    else:
        t = r * math.sqrt((n - 2) / (1.0 - r * r))
        p = float(2.0 * stdtr(n - 2, -abs(t)))
    return TestResult(statistic=r, p_value=p)
