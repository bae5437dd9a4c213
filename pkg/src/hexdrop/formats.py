"""Point-set serialisation (CSV, JSON) and SVG rendering."""

from __future__ import annotations

import contextlib
import json
import math
import os
import xml.etree.ElementTree as ET

from .geometry import SQRT3, cell_center
from .network import sector_angle

CSV_HEADER = "cell_m,cell_n,sector_id,x,y"
SVG_NS = "http://www.w3.org/2000/svg"
_SECTOR_COLOURS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]


@contextlib.contextmanager
def _text_sink(sink):
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="utf-8", newline="\n") as fh:
            yield fh
    else:
        yield sink


def format_csv(points):
    rows = [CSV_HEADER]
    rows.extend(
        f"{p.m},{p.n},{p.sector_id},{p.p.x:.9g},{p.p.y:.9g}" for p in points
    )
    return "\n".join(rows) + "\n"


def format_json(points):
    records = [
        {"cell_m": p.m, "cell_n": p.n, "sector_id": p.sector_id, "x": p.p.x, "y": p.p.y}
        for p in points
    ]
    return json.dumps(records) + "\n"


def write_points(points, fmt, sink):
    """Write labelled points as ``csv`` or ``json`` to a path or text stream."""
    if fmt == "csv":
        text = format_csv(points)
    elif fmt == "json":
        text = format_json(points)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with _text_sink(sink) as fh:
        fh.write(text)


def _hexagon_path(cx, cy, L):
    h = SQRT3 * L / 2
    pts = [(cx + L, cy), (cx + L / 2, cy + h), (cx - L / 2, cy + h),
           (cx - L, cy), (cx - L / 2, cy - h), (cx + L / 2, cy - h)]
    return "M " + " L ".join(f"{x:.6g},{y:.6g}" for x, y in pts) + " Z"


def _extent(cfg, points):
    xs, ys = [], []
    for cell in cfg.cells:
        cx, cy = cell_center(cell.idx, cfg.L0)
        h = SQRT3 * cell.L / 2
        xs += [cx - cell.L, cx + cell.L]
        ys += [cy - h, cy + h]
    for p in points:
        xs.append(p.p.x)
        ys.append(p.p.y)
    if not xs:
        return -1.0, 1.0, -1.0, 1.0
    return min(xs), max(xs), min(ys), max(ys)


def build_svg(cfg, points):
    """SVG element tree: cell outlines, sector boundaries and one dot per point.

    Content sits in a group flipped by ``scale(1,-1)`` so +y points up.
    """
    x0, x1, y0, y1 = _extent(cfg, points)
    w, h = (x1 - x0) or 1.0, (y1 - y0) or 1.0
    x0, x1 = x0 - 0.05 * w, x1 + 0.05 * w
    y0, y1 = y0 - 0.05 * h, y1 + 0.05 * h
    w, h = x1 - x0, y1 - y0
    stroke = 0.002 * max(w, h)
    radius = 0.0025 * max(w, h)

    ET.register_namespace("", SVG_NS)
    root = ET.Element(f"{{{SVG_NS}}}svg", {
        "version": "1.1",
        "viewBox": f"{x0:.6g} {-y1:.6g} {w:.6g} {h:.6g}",
        "width": "800",
        "height": f"{800 * h / w:.0f}",
    })
    content = ET.SubElement(root, f"{{{SVG_NS}}}g", {"id": "content", "transform": "scale(1,-1)"})
    cells = ET.SubElement(content, f"{{{SVG_NS}}}g", {
        "id": "cells", "fill": "none", "stroke": "black", "stroke-width": f"{stroke:.4g}",
    })
    for cell in cfg.cells:
        cx, cy = cell_center(cell.idx, cfg.L0)
        ET.SubElement(cells, f"{{{SVG_NS}}}path", {
            "class": "cell", "d": _hexagon_path(cx, cy, cell.L),
            "data-m": str(cell.idx.m), "data-n": str(cell.idx.n),
        })
        if cell.sectors > 1:
            for sid in range(1, cell.sectors + 1):
                phi = sector_angle(cell.sectors, sid)
                ET.SubElement(cells, f"{{{SVG_NS}}}line", {
                    "class": "sector-boundary",
                    "x1": f"{cx:.6g}", "y1": f"{cy:.6g}",
                    "x2": f"{cx + cell.L * math.cos(phi):.6g}",
                    "y2": f"{cy + cell.L * math.sin(phi):.6g}",
                    "stroke-dasharray": f"{3 * stroke:.4g}",
                })
    nodes = ET.SubElement(content, f"{{{SVG_NS}}}g", {"id": "nodes", "stroke": "none"})
    r = f"{radius:.4g}"
    for p in points:
        ET.SubElement(nodes, f"{{{SVG_NS}}}circle", {
            "cx": f"{p.p.x:.6g}", "cy": f"{p.p.y:.6g}", "r": r,
            "fill": _SECTOR_COLOURS[(p.sector_id - 1) % len(_SECTOR_COLOURS)],
        })
    return ET.ElementTree(root)


def render_svg(cfg, points, sink):
    """Write an SVG 1.1 picture of the network to a path or text stream."""
    tree = build_svg(cfg, points)
    ET.indent(tree, space=" ")
    text = ET.tostring(tree.getroot(), encoding="unicode", xml_declaration=True)
    with _text_sink(sink) as fh:
        fh.write(text + "\n")
