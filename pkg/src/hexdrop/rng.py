"""Seeded uniform streams on the open interval (0, 1).

A :class:`RandomStream` wraps numpy's PCG64 bit generator and counts the
number of uniforms it has handed out. Independent substreams are derived from
a master seed and integer keys with :func:`derive_seed`, a SplitMix64-style
mixer, so the same keys always map to the same stream regardless of the order
or thread in which streams are created.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
# Smallest positive double; replaces an exact 0.0 from the generator.
TINY = float(np.nextafter(0.0, 1.0))


def splitmix64(z):
    """SplitMix64 finaliser: a bijective avalanche mix of a 64-bit integer."""
    z = (z + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed, *keys):
    """Fold signed integer ``keys`` into ``master_seed`` to get a 64-bit seed."""
    h = splitmix64(check_seed(master_seed))
    for k in keys:
        h = splitmix64(h ^ (int(k) & MASK64))
    return h


def check_seed(seed):
    seed = int(seed)
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


class RandomStream:
    """Deterministic stream of standard uniforms in (0, 1).

    ``position`` counts the uniforms drawn so far. Drawing ``k`` values with
    :meth:`uniforms` yields the same numbers, in the same order, as ``k`` calls
    to :meth:`uniform`.

    A stream is meant for a single owner; use :meth:`spawn` to hand
    independent streams to other threads.
    """

    def __init__(self, seed):
        self.seed = check_seed(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))
        self.position = 0

    def uniform(self):
        u = self._gen.random()
        self.position += 1
        return u if u > 0.0 else TINY

    def uniforms(self, k):
        u = self._gen.random(int(k))
        self.position += int(k)
        u[u == 0.0] = TINY
        return u

    def spawn(self, *keys):
        """Independent child stream keyed by integers (e.g. a lattice index)."""
        return RandomStream(derive_seed(self.seed, *keys))

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, position={self.position})"
