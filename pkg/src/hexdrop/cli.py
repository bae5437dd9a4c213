"""Command-line interface.

Exit status is 0 on success, 1 when a validation check fails and 2 for usage,
config or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .config import example_config_text, load_config
from .errors import HexdropError
from .formats import render_svg, write_points
from .geometry import cell_center, ring_indices
from .network import generate_network
from .rng import RandomStream, check_seed
from .samplers import sample_points, sample_points_rejection
from .stats import battery, shape_from_name

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _seed(text):
    try:
        return check_seed(int(text, 0))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hexdrop", description="Uniform random node dropping over hexagonal cellular networks."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate node positions for a network config")
    gen.add_argument("--config", required=True, help="network config file")
    gen.add_argument("--seed", required=True, type=_seed, help="master seed (unsigned 64-bit)")
    gen.add_argument("--out", required=True, help="output file, or - for stdout")
    gen.add_argument("--format", choices=["csv", "json"], default="csv")
    gen.add_argument("--svg", help="also render the network to this SVG file")
    gen.add_argument("--workers", type=int, default=1, help="threads for per-cell generation")

    val = sub.add_parser("validate", help="run the goodness-of-fit battery on one shape")
    val.add_argument("--shape", required=True, choices=["hexagon", "rhombus", "triangle"])
    val.add_argument("--n", required=True, type=int, help="number of points per sampler")
    val.add_argument("--seed", required=True, type=_seed)
    val.add_argument("--depth", type=int, choices=[1, 2], default=2)
    val.add_argument("--L", type=_positive_float, default=1.0, help="side length")
    val.add_argument("--json", action="store_true", help="print reports as JSON")

    cen = sub.add_parser("centers", help="print lattice cell centres for rings 0..R")
    cen.add_argument("--rings", required=True, type=int)
    cen.add_argument("--L0", required=True, type=_positive_float)

    sub.add_parser("example", help="print the bundled 19-cell example config")
    return parser


def _gen(args, out):
    cfg = load_config(args.config)
    points = generate_network(cfg, args.seed, workers=args.workers)
    write_points(points, args.format, out if args.out == "-" else args.out)
    if args.svg:
        render_svg(cfg, points, args.svg)
    return EXIT_OK


def _validate(args, out):
    shape = shape_from_name(args.shape, args.L)
    root = RandomStream(args.seed)
    sample = sample_points(shape, root.spawn(1), args.n)
    oracle = sample_points_rejection(shape, root.spawn(2), args.n)
    reports = battery(shape, sample, oracle, args.depth)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2), file=out)
    else:
        for r in reports:
            print(r, file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _centers(args, out):
    if args.rings < 0:
        raise ValueError("--rings must be non-negative")
    for r in range(args.rings + 1):
        for idx in ring_indices(r):
            x, y = cell_center(idx, args.L0)
            print(f"{idx.m} {idx.n} {x:.9g} {y:.9g}", file=out)
    return EXIT_OK


def cli_main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handlers = {"gen": _gen, "validate": _validate, "centers": _centers}
    try:
        if args.command == "example":
            out.write(example_config_text())
            return EXIT_OK
        return handlers[args.command](args, out)
    except (HexdropError, ValueError, OSError) as exc:
        print(f"hexdrop: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(cli_main())
