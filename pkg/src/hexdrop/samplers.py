"""Exact inverse-transform samplers for the hexagon and its sectors.

A point is drawn in two steps: x from the shape's marginal law by inverting
its CDF in closed form, then y uniformly between the shape's lower and upper
edge at that x. Both steps consume one uniform each.

The public functions accept scalars or numpy arrays; scalar input gives a
Python float back.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .geometry import SQRT3, Point, ShapeKind, contains_xy


def _scalar_or_array(values, like):
    if np.ndim(like) == 0:
        return float(values)
    return values


def _as_unit(u):
    u = np.asarray(u, dtype=float)
    if not np.all((u > 0.0) & (u < 1.0)):
        raise DomainError("u must lie in the open interval (0, 1)")
    return u


def _inv_cdf(kind, L, u):
    if kind is ShapeKind.HEXAGON:
        return np.where(
            u <= 1 / 6,
            L * (np.sqrt(1.5 * u) - 1.0),
            np.where(
                u <= 5 / 6,
                0.75 * L * (2.0 * u - 1.0),
                L * (1.0 - np.sqrt(1.5 * (1.0 - u))),
            ),
        )
    if kind is ShapeKind.RHOMBUS:
        return np.where(
            u <= 0.25,
            0.5 * L * (2.0 * np.sqrt(u) - 1.0),
            np.where(
                u <= 0.75,
                L * (u - 0.25),
                L * (1.0 - np.sqrt(1.0 - u)),
            ),
        )
    return np.where(
        u <= 0.5,
        L * np.sqrt(u / 2.0),
        L * (1.0 - np.sqrt((1.0 - u) / 2.0)),
    )


def inv_cdf_x(shape, u):
    """Quantile function of the x-coordinate of a uniform point in ``shape``.

    At a branch seam (u = 1/6, 5/6 for the hexagon; 1/4, 3/4 for the rhombus;
    1/2 for the triangle) the lower branch is used. Raises
    :class:`DomainError` unless 0 < u < 1.
    """
    uu = _as_unit(u)
    return _scalar_or_array(_inv_cdf(shape.kind, shape.L, uu), u)


def _cdf(kind, L, x):
    lo, hi = {
        ShapeKind.HEXAGON: (-L, L),
        ShapeKind.RHOMBUS: (-L / 2, L),
        ShapeKind.TRIANGLE: (0.0, L),
    }[kind]
    x = np.clip(x, lo, hi)
    if kind is ShapeKind.HEXAGON:
        c = 2.0 / (3.0 * L * L)
        return np.where(
            x <= -L / 2,
            c * (L + x) ** 2,
            np.where(x <= L / 2, 0.5 + 2.0 * x / (3.0 * L), 1.0 - c * (L - x) ** 2),
        )
    if kind is ShapeKind.RHOMBUS:
        return np.where(
            x <= 0.0,
            ((x + L / 2) / L) ** 2,
            np.where(x <= L / 2, 0.25 + x / L, 1.0 - ((L - x) / L) ** 2),
        )
    return np.where(
        x <= L / 2,
        2.0 * (x / L) ** 2,
        1.0 - 2.0 * ((L - x) / L) ** 2,
    )


def cdf_x(shape, x):
    """CDF of the x-coordinate; 0 left of the support and 1 right of it."""
    xx = np.asarray(x, dtype=float)
    return _scalar_or_array(_cdf(shape.kind, shape.L, xx), x)


def pdf_x(shape, x):
    """Marginal density of the x-coordinate (zero outside the support)."""
    L = shape.L
    xx = np.asarray(x, dtype=float)
    if shape.kind is ShapeKind.HEXAGON:
        ax = np.abs(xx)
        f = np.where(ax <= L / 2, 2.0 / (3.0 * L), 4.0 / (3.0 * L * L) * (L - ax))
        f = np.where(ax <= L, f, 0.0)
    elif shape.kind is ShapeKind.RHOMBUS:
        f = np.where(
            xx <= 0.0,
            (2.0 * xx + L) / L**2,
            np.where(xx <= L / 2, 1.0 / L, 2.0 * (L - xx) / L**2),
        )
        f = np.where((xx >= -L / 2) & (xx <= L), f, 0.0)
    else:
        f = np.where(xx <= L / 2, 4.0 * xx / L**2, 4.0 * (L - xx) / L**2)
        f = np.where((xx >= 0.0) & (xx <= L), f, 0.0)
    return _scalar_or_array(f, x)


def cdf_y(shape, y):
    """CDF of the y-coordinate of a uniform point in ``shape``.

    The rhombus has constant width L at every height, so its y is uniform.
    The hexagon and triangle have widths that shrink linearly towards the
    top (and bottom) vertices, giving quadratic CDFs.
    """
    L, h = shape.L, shape.height
    yy = np.asarray(y, dtype=float)
    if shape.kind is ShapeKind.HEXAGON:
        yc = np.clip(yy, -h, h)
        ay = np.abs(yc)
        half = (2.0 / shape.area) * (L * ay - ay * ay / (2.0 * SQRT3))
        F = 0.5 + np.sign(yc) * half
    elif shape.kind is ShapeKind.RHOMBUS:
        F = np.clip(yy, 0.0, h) / h
    else:
        yc = np.clip(yy, 0.0, h)
        F = (L * yc - yc * yc / SQRT3) / shape.area
    return _scalar_or_array(F, y)


def joint_pdf(shape, p):
    """1/area inside the closed shape, 0 outside."""
    return 1.0 / shape.area if bool(contains_xy(shape, p[0], p[1], 0.0)) else 0.0


def _cond_bounds(kind, L, x):
    s3 = SQRT3
    h = s3 * L / 2
    if kind is ShapeKind.HEXAGON:
        half = np.where(x <= -L / 2, s3 * (x + L), np.where(x <= L / 2, h, s3 * (L - x)))
        return -half, half
    if kind is ShapeKind.RHOMBUS:
        lo = np.where(x <= 0.0, -s3 * x, 0.0)
        hi = np.where(x <= L / 2, h, s3 * (L - x))
        return lo, hi
    hi = np.where(x <= L / 2, s3 * x, s3 * (L - x))
    return np.zeros_like(hi), hi


def cond_y_bounds(shape, x0):
    """Support ``(lo, hi)`` of the uniform law of y given x = x0.

    Raises :class:`DomainError` unless x0 is strictly inside the x-support.
    """
    a, b = shape.x_support
    xx = np.asarray(x0, dtype=float)
    if not np.all((xx > a) & (xx < b)):
        raise DomainError(f"x0 must lie in the open interval ({a}, {b})")
    lo, hi = _cond_bounds(shape.kind, shape.L, xx)
    return _scalar_or_array(lo, x0), _scalar_or_array(hi, x0)


def _compose(shape, u1, u2):
    x = _inv_cdf(shape.kind, shape.L, u1)
    lo, hi = _cond_bounds(shape.kind, shape.L, x)
    return x, lo + u2 * (hi - lo)


def sample_point(shape, rng):
    """One uniform point in ``shape``; consumes exactly two uniforms from ``rng``."""
    u1 = rng.uniform()
    u2 = rng.uniform()
    x, y = _compose(shape, np.float64(u1), np.float64(u2))
    return Point(float(x), float(y))


def sample_points(shape, rng, n):
    """``n`` uniform points as an ``(n, 2)`` array.

    Equivalent to ``n`` calls of :func:`sample_point` on the same stream:
    the draws are taken pairwise in the same order.
    """
    u = rng.uniforms(2 * n).reshape(n, 2)
    x, y = _compose(shape, u[:, 0], u[:, 1])
    return np.column_stack([x, y])


def sample_point_rejection(shape, rng):
    """One uniform point in ``shape`` by rejection from its bounding box."""
    x0, x1, y0, y1 = shape.bounding_box
    while True:
        x = x0 + rng.uniform() * (x1 - x0)
        y = y0 + rng.uniform() * (y1 - y0)
        if contains_xy(shape, x, y, 0.0):
            return Point(x, y)


def sample_points_rejection(shape, rng, n, batch=None):
    """``n`` points from the rejection sampler as an ``(n, 2)`` array.

    Candidates are drawn in batches, so surplus accepted candidates from the
    final batch are discarded and the stream position is not comparable with
    repeated :func:`sample_point_rejection` calls.
    """
    x0, x1, y0, y1 = shape.bounding_box
    batch = batch or max(64, int(1.1 * n / _box_fill(shape)) + 16)
    chunks, have = [], 0
    while have < n:
        u = rng.uniforms(2 * batch).reshape(batch, 2)
        x = x0 + u[:, 0] * (x1 - x0)
        y = y0 + u[:, 1] * (y1 - y0)
        keep = contains_xy(shape, x, y, 0.0)
        chunk = np.column_stack([x[keep], y[keep]])
        chunks.append(chunk)
        have += len(chunk)
    if not chunks:
        return np.empty((0, 2))
    return np.concatenate(chunks)[:n]


def _box_fill(shape):
    x0, x1, y0, y1 = shape.bounding_box
    return shape.area / ((x1 - x0) * (y1 - y0))
