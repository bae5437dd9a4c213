"""Goodness-of-fit checks for the samplers.

Chi-square counts over an equal-area triangular partition test that the
joint density is flat; one-sample KS tests compare each coordinate with its
analytic marginal; a two-sample KS test compares the inverse-transform
sampler against the rejection sampler. All tests use alpha = 0.001.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.stats import chi2

from .errors import BinningError
from .geometry import CellShape, Point, ShapeKind
from .samplers import cdf_x, cdf_y

ALPHA = 0.001
# Asymptotic KS critical value sqrt(-ln(alpha/2) / 2) ~= 1.9495.
KS_C_ALPHA = math.sqrt(-math.log(ALPHA / 2) / 2)
_BIN_TOL = 1e-9


@dataclass(frozen=True)
class GofReport:
    name: str
    statistic: float
    threshold: float
    n: int
    dof: int | None = None

    @property
    def passed(self):
        return self.statistic <= self.threshold

    def to_dict(self):
        d = asdict(self)
        d["pass"] = self.passed
        return d

    def __str__(self):
        verdict = "PASS" if self.passed else "FAIL"
        dof = f" dof={self.dof}" if self.dof is not None else ""
        return (f"{verdict} {self.name}: statistic={self.statistic:.6g} "
                f"threshold={self.threshold:.6g} n={self.n}{dof}")


def _as_xy(points):
    arr = np.asarray(points, dtype=float)
    return arr.reshape(-1, 2)


def _midsplit(tri):
    a, b, c = tri
    ab = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    bc = Point((b.x + c.x) / 2, (b.y + c.y) / 2)
    ca = Point((c.x + a.x) / 2, (c.y + a.y) / 2)
    return [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]


def equal_area_partition(shape, depth=2):
    """Congruent equilateral triangles covering ``shape``.

    Depth 1 cuts the hexagon into its 6 centre-vertex triangles and the
    rhombus into 2; the triangle is its own bin. Depth 2 splits every depth-1
    triangle into 4 through its edge midpoints.
    """
    if depth not in (1, 2):
        raise ValueError("depth must be 1 or 2")
    v = shape.vertices()
    o = Point(0.0, 0.0)
    if shape.kind is ShapeKind.HEXAGON:
        tris = [(o, v[k], v[(k + 1) % 6]) for k in range(6)]
    elif shape.kind is ShapeKind.RHOMBUS:
        tris = [(v[0], v[1], v[2]), (v[0], v[2], v[3])]
    else:
        tris = [tuple(v)]
    if depth == 2:
        tris = [sub for t in tris for sub in _midsplit(t)]
    return tris


def triangle_area(tri):
    a, b, c = tri
    return abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)) / 2


def assign_bins(xy, tris, scale=1.0):
    """Index of the first triangle containing each point; -1 if none."""
    xy = _as_xy(xy)
    out = np.full(len(xy), -1, dtype=int)
    tol = _BIN_TOL * scale
    for k, (a, b, c) in enumerate(tris):
        todo = out < 0
        if not todo.any():
            break
        px, py = xy[todo, 0], xy[todo, 1]
        # Edge functions scaled to distances so ``tol`` is a length.
        inside = np.ones(len(px), dtype=bool)
        for p, q in ((a, b), (b, c), (c, a)):
            ex, ey = q.x - p.x, q.y - p.y
            cross = (ex * (py - p.y) - ey * (px - p.x)) / math.hypot(ex, ey)
            inside &= cross >= -tol
        idx = np.flatnonzero(todo)[inside]
        out[idx] = k
    return out


def chi_square_uniformity(points, shape, depth=2):
    """Pearson chi-square of bin counts against a flat density."""
    xy = _as_xy(points)
    tris = equal_area_partition(shape, depth)
    bins = len(tris)
    n = len(xy)
    if n < 10 * bins:
        raise ValueError(f"need at least {10 * bins} points for {bins} bins, got {n}")
    which = assign_bins(xy, tris, shape.L)
    if (which < 0).any():
        bad = xy[np.argmax(which < 0)]
        raise BinningError(f"point ({bad[0]}, {bad[1]}) lies outside every bin")
    counts = np.bincount(which, minlength=bins)
    expected = n / bins
    stat = float(((counts - expected) ** 2).sum() / expected)
    dof = bins - 1
    threshold = float(chi2.ppf(1 - ALPHA, dof)) if dof > 0 else 0.0
    return GofReport(f"chi-square {shape.kind.value} depth={depth}", stat, threshold, n, dof)


def ks_statistic(samples, cdf):
    """One-sample KS distance sup |ECDF - cdf| for a vectorised ``cdf``."""
    x = np.sort(np.asarray(samples, dtype=float))
    n = len(x)
    F = cdf(x)
    i = np.arange(1, n + 1)
    return float(max((i / n - F).max(), (F - (i - 1) / n).max()))


def ks_two_sample_statistic(a, b):
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    grid = np.concatenate([a, b])
    fa = np.searchsorted(a, grid, side="right") / len(a)
    fb = np.searchsorted(b, grid, side="right") / len(b)
    return float(np.abs(fa - fb).max())


def _check_n(n, minimum=100):
    if n < minimum:
        raise ValueError(f"KS tests need at least {minimum} samples, got {n}")


def ks_marginal_x(points, shape):
    xy = _as_xy(points)
    _check_n(len(xy))
    d = ks_statistic(xy[:, 0], lambda t: cdf_x(shape, t))
    return GofReport(f"KS x-marginal {shape.kind.value}", d, KS_C_ALPHA / math.sqrt(len(xy)), len(xy))


def ks_marginal_y(points, shape):
    xy = _as_xy(points)
    _check_n(len(xy))
    d = ks_statistic(xy[:, 1], lambda t: cdf_y(shape, t))
    return GofReport(f"KS y-marginal {shape.kind.value}", d, KS_C_ALPHA / math.sqrt(len(xy)), len(xy))


def ks_two_sample(a, b, name="KS two-sample"):
    n, m = len(a), len(b)
    _check_n(n)
    _check_n(m)
    d = ks_two_sample_statistic(a, b)
    return GofReport(name, d, KS_C_ALPHA * math.sqrt((n + m) / (n * m)), n + m)


def battery(shape, sample, oracle, depth=2):
    """Run every check on ``sample`` (inverse transform) and ``oracle`` (rejection).

    Both are ``(N, 2)`` arrays of points in ``shape``'s canonical frame.
    """
    sample, oracle = _as_xy(sample), _as_xy(oracle)
    kind = shape.kind.value
    return [
        chi_square_uniformity(sample, shape, depth),
        ks_marginal_x(sample, shape),
        ks_marginal_y(sample, shape),
        ks_two_sample(sample[:, 0], oracle[:, 0], f"KS two-sample x {kind} vs rejection"),
        ks_two_sample(sample[:, 1], oracle[:, 1], f"KS two-sample y {kind} vs rejection"),
    ]


def shape_from_name(name, L=1.0):
    return CellShape(ShapeKind(name.lower()), L)
