"""Line-oriented network description format.

::

    # comments and blank lines are ignored
    lattice L0=1.0
    cell m=0 n=0 sectors=6 nodes=100,100,100,100,100,100
    cell m=1 n=1 L=0.8 sectors=1 nodes=250

The ``lattice`` line must come first and appear once. Each ``cell`` line takes
``m``, ``n``, ``sectors`` and ``nodes`` (one count per sector, comma
separated) and an optional ``L`` that defaults to ``L0``. Sector 1 is the
unrotated base sector; higher ids proceed counterclockwise.
"""

from __future__ import annotations

from importlib import resources

from .errors import ConfigError, ParseError
from .network import CellSpec, NetworkConfig

_LATTICE_KEYS = {"L0"}
_CELL_KEYS = {"m", "n", "L", "sectors", "nodes"}
_CELL_REQUIRED = {"m", "n", "sectors", "nodes"}


def _fields(tokens, lineno, allowed):
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key or not value:
            raise ParseError(f"expected key=value, got {tok!r}", lineno)
        if key not in allowed:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in out:
            raise ParseError(f"repeated key {key!r}", lineno)
        out[key] = value
    return out


def _number(text, kind, key, lineno):
    try:
        return kind(text)
    except ValueError:
        raise ParseError(f"{key}: not a valid {kind.__name__}: {text!r}", lineno) from None


def parse_config(text):
    """Parse config text into a validated :class:`NetworkConfig`."""
    L0 = None
    cells = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *tokens = line.split()
        if head == "lattice":
            if L0 is not None:
                raise ParseError("duplicate lattice line", lineno)
            f = _fields(tokens, lineno, _LATTICE_KEYS)
            if "L0" not in f:
                raise ParseError("lattice line needs L0", lineno)
            L0 = _number(f["L0"], float, "L0", lineno)
            if not L0 > 0:
                raise ConfigError(f"line {lineno}: L0 must be positive")
        elif head == "cell":
            if L0 is None:
                raise ParseError("cell line before lattice line", lineno)
            f = _fields(tokens, lineno, _CELL_KEYS)
            missing = _CELL_REQUIRED - f.keys()
            if missing:
                raise ParseError(f"missing keys: {', '.join(sorted(missing))}", lineno)
            m = _number(f["m"], int, "m", lineno)
            n = _number(f["n"], int, "n", lineno)
            L = _number(f["L"], float, "L", lineno) if "L" in f else L0
            sectors = _number(f["sectors"], int, "sectors", lineno)
            nodes = [_number(v, int, "nodes", lineno) for v in f["nodes"].split(",")]
            try:
                cell = CellSpec((m, n), L, sectors, nodes)
                if cell.idx in seen:
                    raise ConfigError(f"duplicate cell index ({m}, {n})")
                if L > L0:
                    raise ConfigError(f"L={L} exceeds L0={L0}")
            except ConfigError as exc:
                raise type(exc)(f"line {lineno}: {exc}") from None
            seen.add(cell.idx)
            cells.append(cell)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if L0 is None:
        raise ParseError("missing lattice line")
    return NetworkConfig(L0, cells)


def serialize_config(cfg):
    lines = [f"lattice L0={cfg.L0!r}"]
    for c in cfg.cells:
        nodes = ",".join(str(k) for k in c.nodes_per_sector)
        lines.append(f"cell m={c.idx.m} n={c.idx.n} L={c.L!r} sectors={c.sectors} nodes={nodes}")
    return "\n".join(lines) + "\n"


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def example_config_text():
    """Text of the bundled 19-cell, 3920-node example network."""
    return resources.files("hexdrop").joinpath("data/network19.cfg").read_text(encoding="utf-8")


def example_config():
    return parse_config(example_config_text())
