"""Whole-network node generation.

Each cell is described by its lattice index, side length, sector count and
the number of nodes to drop in each sector. Sector ``s`` of an ``S``-sector
cell is the base shape (hexagon, 120 degree rhombus or 60 degree triangle)
rotated counterclockwise by ``(s - 1) * 360 / S`` degrees, then moved to the
cell centre.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import ConfigError
from .geometry import CellShape, LatticeIndex, Point, ShapeKind, as_index, cell_center, rotate_xy
from .rng import RandomStream, check_seed, derive_seed
from .samplers import sample_points

SECTOR_KINDS = {1: ShapeKind.HEXAGON, 3: ShapeKind.RHOMBUS, 6: ShapeKind.TRIANGLE}


class LabeledPoint(NamedTuple):
    m: int
    n: int
    sector_id: int
    p: Point

    @property
    def x(self):
        return self.p.x

    @property
    def y(self):
        return self.p.y


@dataclass(frozen=True)
class CellSpec:
    idx: LatticeIndex
    L: float
    sectors: int
    nodes_per_sector: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "idx", as_index(self.idx))
        object.__setattr__(self, "nodes_per_sector", tuple(int(k) for k in self.nodes_per_sector))
        if not (math.isfinite(self.L) and self.L > 0):
            raise ConfigError(f"cell {tuple(self.idx)}: L must be positive, got {self.L!r}")
        if self.sectors not in SECTOR_KINDS:
            raise ConfigError(f"cell {tuple(self.idx)}: sectors must be 1, 3 or 6, got {self.sectors!r}")
        if len(self.nodes_per_sector) != self.sectors:
            raise ConfigError(
                f"cell {tuple(self.idx)}: expected {self.sectors} node counts, "
                f"got {len(self.nodes_per_sector)}"
            )
        if any(k < 0 for k in self.nodes_per_sector):
            raise ConfigError(f"cell {tuple(self.idx)}: node counts must be non-negative")

    @property
    def total(self):
        return sum(self.nodes_per_sector)


@dataclass(frozen=True)
class NetworkConfig:
    L0: float
    cells: tuple[CellSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        if not (math.isfinite(self.L0) and self.L0 > 0):
            raise ConfigError(f"L0 must be positive, got {self.L0!r}")
        seen = set()
        for cell in self.cells:
            if cell.idx in seen:
                raise ConfigError(f"duplicate cell index {tuple(cell.idx)}")
            seen.add(cell.idx)
            if cell.L > self.L0:
                raise ConfigError(
                    f"cell {tuple(cell.idx)}: L={cell.L} exceeds L0={self.L0}; cells would overlap"
                )

    @property
    def total(self):
        return sum(c.total for c in self.cells)


def sector_shape(sectors):
    """Kind of base shape sampled for a cell with ``sectors`` sectors."""
    try:
        return SECTOR_KINDS[sectors]
    except (KeyError, TypeError):
        raise ConfigError(f"sector count must be 1, 3 or 6, got {sectors!r}") from None


def sector_angle(sectors, sector_id):
    """Counterclockwise rotation, in radians, applied to sector ``sector_id``."""
    sector_shape(sectors)
    if not 1 <= sector_id <= sectors:
        raise ConfigError(f"sector_id must be in 1..{sectors}, got {sector_id}")
    return (sector_id - 1) * 2.0 * math.pi / sectors


def cell_stream(master_seed, idx):
    """Substream used for cell ``idx``; depends only on the seed and the index."""
    idx = as_index(idx)
    return RandomStream(derive_seed(master_seed, idx.m, idx.n))


def generate_cell_arrays(spec, L0, stream):
    """Absolute coordinates and sector ids for one cell.

    Returns ``(xy, sector_ids)`` with ``xy`` of shape ``(N, 2)``, ordered by
    sector then draw order.
    """
    shape = CellShape(sector_shape(spec.sectors), spec.L)
    cx, cy = cell_center(spec.idx, L0)
    xs, sids = [], []
    for sid, count in enumerate(spec.nodes_per_sector, start=1):
        pts = sample_points(shape, stream, count)
        if sid > 1:
            rx, ry = rotate_xy(pts[:, 0], pts[:, 1], sector_angle(spec.sectors, sid))
            pts = np.column_stack([rx, ry])
        xs.append(pts + (cx, cy))
        sids.append(np.full(count, sid, dtype=int))
    if not xs:
        return np.empty((0, 2)), np.empty(0, dtype=int)
    return np.concatenate(xs), np.concatenate(sids)


def _label(spec, xy, sids):
    m, n = spec.idx.m, spec.idx.n
    return [
        LabeledPoint(m, n, int(s), Point(float(x), float(y)))
        for (x, y), s in zip(xy.tolist(), sids.tolist())
    ]


def generate_cell(spec, L0, stream):
    """Drop the nodes of one cell; returns a list of :class:`LabeledPoint`."""
    xy, sids = generate_cell_arrays(spec, L0, stream)
    return _label(spec, xy, sids)


def generate_network(cfg, master_seed, workers=1):
    """Drop every node of ``cfg``; output is a pure function of (cfg, seed).

    Each cell draws from its own substream keyed by (seed, m, n), so cells can
    be generated on ``workers`` threads without changing the result. Output
    order follows the config's cell order.
    """
    master_seed = check_seed(master_seed)

    def one(cell):
        return generate_cell(cell, cfg.L0, cell_stream(master_seed, cell.idx))

    if workers and workers > 1 and len(cfg.cells) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(one, cfg.cells))
    else:
        parts = [one(c) for c in cfg.cells]
    return [p for part in parts for p in part]
