"""Cached numpy lookup tables for bulk field arithmetic.

Used by the exhaustive scans: a q x q multiplication table plus an
inverse table turn field arithmetic over arrays into fancy indexing.
Only characteristic 2 is supported here (addition is XOR); the index
arithmetic stays inside uint8 because q <= 16 keeps a*q+b <= 255.
"""

from __future__ import annotations

import numpy as np

from .field import GF

_MUL: dict[GF, np.ndarray] = {}
_INV: dict[GF, np.ndarray] = {}
_GRIDS: dict[tuple[int, int], tuple[np.ndarray, ...]] = {}


def mul_table(gf: GF) -> np.ndarray:
    """(q, q) uint8 table with mul_table[a, b] = a * b."""
    t = _MUL.get(gf)
    if t is None:
        if gf.p != 2:
            raise ValueError("bulk tables are built for characteristic 2 only")
        q = gf.q
        t = np.array([[gf.mul(a, b) for b in range(q)] for a in range(q)],
                     dtype=np.uint8)
        t.setflags(write=False)
        _MUL[gf] = t
    return t


def inv_table(gf: GF) -> np.ndarray:
    """(q,) uint8 table of inverses; index 0 holds a 0 sentinel."""
    t = _INV.get(gf)
    if t is None:
        if gf.p != 2:
            raise ValueError("bulk tables are built for characteristic 2 only")
        t = np.array([0] + [gf.inv(a) for a in range(1, gf.q)], dtype=np.uint8)
        t.setflags(write=False)
        _INV[gf] = t
    return t


def nonzero_grid(q: int, n: int) -> tuple[np.ndarray, ...]:
    """n coordinate arrays enumerating (F_q^*)^n in lexicographic order.

    Column 0 varies slowest, so flat index i corresponds to the i-th
    tuple in ascending lexicographic order of (d_0, ..., d_{n-1}).
    """
    key = (q, n)
    grids = _GRIDS.get(key)
    if grids is None:
        base = q - 1
        idx = np.arange(base ** n, dtype=np.int64)
        cols = []
        for k in range(n):
            cols.append(((idx // base ** (n - 1 - k)) % base + 1).astype(np.uint8))
        grids = tuple(cols)
        for g in grids:
            g.setflags(write=False)
        _GRIDS[key] = grids
    return grids
