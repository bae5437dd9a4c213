"""Uniform random node dropping over hexagonal cellular networks."""

__version__ = "0.1.0"

from .errors import BinningError, ConfigError, DomainError, ParityError, ParseError
from .geometry import (
    CellShape,
    LatticeIndex,
    Point,
    ShapeKind,
    cell_center,
    contains,
    ring_indices,
    rotate,
)
from .network import (
    CellSpec,
    LabeledPoint,
    NetworkConfig,
    generate_cell,
    generate_network,
    sector_angle,
    sector_shape,
)
from .rng import RandomStream
from .samplers import (
    cdf_x,
    cdf_y,
    cond_y_bounds,
    inv_cdf_x,
    joint_pdf,
    pdf_x,
    sample_point,
    sample_point_rejection,
    sample_points,
)
from .config import parse_config, serialize_config
from .formats import render_svg, write_points
