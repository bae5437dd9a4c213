"""Cell shapes, membership tests, rotation and hexagonal lattice placement.

All shapes live in one canonical frame. The hexagon is centred on the origin
with vertices at (+-L, 0) and (+-L/2, +-sqrt(3)L/2), so its top and bottom
edges are flat. The rhombus is the 120 degree sector spanning polar angles
[0, 120] and the triangle is the 60 degree sector spanning [0, 60]. Other
sectors are obtained with :func:`rotate`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ParityError

SQRT3 = math.sqrt(3.0)


class Point(NamedTuple):
    x: float
    y: float


class ShapeKind(str, enum.Enum):
    HEXAGON = "hexagon"
    RHOMBUS = "rhombus"
    TRIANGLE = "triangle"


# Fraction of the hexagon covered by one shape of each kind.
_SECTORS_PER_KIND = {ShapeKind.HEXAGON: 1, ShapeKind.RHOMBUS: 3, ShapeKind.TRIANGLE: 6}


@dataclass(frozen=True)
class CellShape:
    """One of the three cell geometries, with side length ``L``.

    For the hexagon ``L`` is both the side length and the circumradius.
    """

    kind: ShapeKind
    L: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", ShapeKind(self.kind))
        if not (math.isfinite(self.L) and self.L > 0):
            raise ValueError(f"side length must be positive and finite, got {self.L!r}")

    @classmethod
    def hexagon(cls, L=1.0):
        return cls(ShapeKind.HEXAGON, L)

    @classmethod
    def rhombus(cls, L=1.0):
        return cls(ShapeKind.RHOMBUS, L)

    @classmethod
    def triangle(cls, L=1.0):
        return cls(ShapeKind.TRIANGLE, L)

    @property
    def height(self):
        """sqrt(3)/2 * L: hexagon apothem, and the y-extent of the sectors."""
        return SQRT3 * self.L / 2

    @property
    def area(self):
        return 1.5 * SQRT3 * self.L**2 / _SECTORS_PER_KIND[self.kind]

    @property
    def x_support(self):
        L = self.L
        if self.kind is ShapeKind.HEXAGON:
            return (-L, L)
        if self.kind is ShapeKind.RHOMBUS:
            return (-L / 2, L)
        return (0.0, L)

    @property
    def y_support(self):
        h = self.height
        if self.kind is ShapeKind.HEXAGON:
            return (-h, h)
        return (0.0, h)

    @property
    def bounding_box(self):
        """(xmin, xmax, ymin, ymax)."""
        return self.x_support + self.y_support

    def vertices(self):
        """Polygon vertices in counterclockwise order."""
        L, h = self.L, self.height
        if self.kind is ShapeKind.HEXAGON:
            return [Point(L, 0.0), Point(L / 2, h), Point(-L / 2, h),
                    Point(-L, 0.0), Point(-L / 2, -h), Point(L / 2, -h)]
        if self.kind is ShapeKind.RHOMBUS:
            return [Point(0.0, 0.0), Point(L, 0.0), Point(L / 2, h), Point(-L / 2, h)]
        return [Point(0.0, 0.0), Point(L, 0.0), Point(L / 2, h)]


def _edge_excess(kind, L, x, y):
    """Largest signed distance of (x, y) outside the shape's edges.

    Each edge is written as ``a*x + b*y <= c`` with unit-free integer/sqrt(3)
    coefficients and divided by the exact normaliser (1 or 2), so vertices
    computed as L/2 and sqrt(3)*L/2 evaluate to exactly zero.
    """
    s3 = SQRT3
    if kind is ShapeKind.HEXAGON:
        ax, ay = np.abs(x), np.abs(y)
        return np.maximum.reduce([
            ax - L,
            ay - s3 * L / 2,
            (s3 * ax + ay - s3 * L) / 2,
        ])
    if kind is ShapeKind.RHOMBUS:
        return np.maximum.reduce([
            -y,
            y - s3 * L / 2,
            (s3 * x + y - s3 * L) / 2,
            -(s3 * x + y) / 2,
        ])
    return np.maximum.reduce([
        -y,
        (y - s3 * x) / 2,
        (s3 * x + y - s3 * L) / 2,
    ])


def contains_xy(shape, x, y, tol=0.0):
    """Vectorised :func:`contains` over coordinate arrays."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    excess = _edge_excess(shape.kind, shape.L, x, y)
    return np.isfinite(x) & np.isfinite(y) & (excess <= tol)


def contains(shape, p, tol=0.0):
    """True if ``p`` is inside the closed shape or within ``tol`` of it."""
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return bool(contains_xy(shape, p[0], p[1], tol))


def rotate(p, phi):
    """Rotate ``p`` counterclockwise about the origin by ``phi`` radians."""
    c, s = math.cos(phi), math.sin(phi)
    x, y = p
    return Point(x * c - y * s, x * s + y * c)


def rotate_xy(x, y, phi):
    """Vectorised :func:`rotate`; returns ``(x', y')`` arrays."""
    c, s = math.cos(phi), math.sin(phi)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return x * c - y * s, x * s + y * c


@dataclass(frozen=True, order=True)
class LatticeIndex:
    """Column ``m`` and row ``n`` of a cell on the hexagonal lattice.

    Only indices with ``n`` and ``m`` of equal parity name a cell centre.
    """

    m: int
    n: int

    def __post_init__(self):
        if (self.n - self.m) % 2 != 0:
            raise ParityError(
                f"lattice index (m={self.m}, n={self.n}) is off-lattice: "
                "n and m must have the same parity"
            )

    def __iter__(self):
        yield self.m
        yield self.n

    def ring(self):
        """Number of hexagon-adjacency steps from the origin cell."""
        am, an = abs(self.m), abs(self.n)
        return am + max(0, (an - am) // 2)


def as_index(idx):
    if isinstance(idx, LatticeIndex):
        return idx
    m, n = idx
    return LatticeIndex(int(m), int(n))


def cell_center(idx, L0):
    """Centre of cell ``idx`` on a lattice of reference size ``L0``.

    Columns are spaced 3*L0/2 apart in x and rows sqrt(3)*L0/2 apart in y.
    """
    idx = as_index(idx)
    if not L0 > 0:
        raise ValueError(f"L0 must be positive, got {L0!r}")
    return Point(1.5 * L0 * idx.m, SQRT3 * L0 / 2 * idx.n)


def ring_indices(radius):
    """Lattice indices exactly ``radius`` steps from the origin, sorted by (m, n)."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    out = []
    for m in range(-radius, radius + 1):
        for n in range(-2 * radius, 2 * radius + 1):
            if (n - m) % 2:
                continue
            idx = LatticeIndex(m, n)
            if idx.ring() == radius:
                out.append(idx)
    return out
