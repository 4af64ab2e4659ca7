"""Whole-lattice dynamic programs over the 3^n subcubes of {0,1}^n.

A lattice table has n trailing axes of length 3 (optionally preceded by batch
axes). Variable v lives on axis ``-1 - v``; along that axis index 0/1 means
"fixed to 0/1" and index 2 means "free". In C order the flat position of a
subcube is therefore its base-3 key  sum_v d_v 3^v  (see ``Subcube.key``).

The recursive solvers visit subcubes grouped by their set of free variables
F (a bitmask). All subcubes sharing F form a strided (2, ..., 2) block of the
table, and removing one free variable from F yields two sibling blocks of the
same shape, so every recurrence step is a handful of whole-block numpy ops.
Masks are visited in increasing numeric order, which puts every F after all
of its proper subsets.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .boolfn import TruthTable

NONCONSTANT = -1
# slack value marking an infeasible subcube; any negative slack is clamped to it
BOTTOM = -1


def extend(points: np.ndarray, n: int, combine) -> np.ndarray:
    """Lift per-point values of shape (..., 2^n) to all subcubes.

    The value of a subcube with free variable v is
    ``combine(value with v=0, value with v=1)``.
    """
    arr = points.reshape(points.shape[:-1] + (2,) * n)
    for v in range(n):
        ax = arr.ndim - 1 - v
        a = np.take(arr, 0, axis=ax)
        b = np.take(arr, 1, axis=ax)
        arr = np.stack([a, b, combine(a, b)], axis=ax)
    return arr


def _constancy_combine(a, b):
    return np.where(a == b, a, np.int8(NONCONSTANT)).astype(np.int8)


def constancy_batch(bits: np.ndarray, n: int) -> np.ndarray:
    """Constancy table for a batch of truth tables of shape (..., 2^n).

    Entry is the constant value (0/1) of f on the subcube, or -1.
    """
    return extend(np.asarray(bits, dtype=np.int8), n, _constancy_combine)


@lru_cache(maxsize=8)
def constancy_table(f: TruthTable) -> np.ndarray:
    table = constancy_batch(f.bits, f.n)
    table.flags.writeable = False
    return table


@lru_cache(maxsize=32)
def codim_table(n: int) -> np.ndarray:
    """Number of fixed variables of every subcube."""
    table = extend(np.full(1 << n, n, dtype=np.int16), n, lambda a, b: a - 1)
    table.flags.writeable = False
    return table


def points_view(table: np.ndarray, n: int) -> np.ndarray:
    """The 2^n point entries of a lattice table, flattened in table-index order."""
    sub = table[(Ellipsis,) + (slice(0, 2),) * n]
    return sub.reshape(sub.shape[: sub.ndim - n] + (1 << n,))


def superset_min(table: np.ndarray, n: int) -> np.ndarray:
    """For every subcube, the minimum of ``table`` over all subcubes containing it."""
    out = np.array(table, copy=True)
    for v in range(n):
        view = np.moveaxis(out, out.ndim - 1 - v, 0)
        view[0] = np.minimum(view[0], view[2])
        view[1] = np.minimum(view[1], view[2])
    return out


def point_certificates(const: np.ndarray, n: int) -> np.ndarray:
    """C(f, x) for every input x, shape (..., 2^n).

    C(f, x) is the least codimension of a constant subcube containing x.
    """
    codim = np.broadcast_to(codim_table(n), const.shape)
    big = np.int16(n + 1)
    g = np.where(const >= 0, codim, big).astype(np.int16)
    return points_view(superset_min(g, n), n)


def subcube_min(point_values: np.ndarray, n: int) -> np.ndarray:
    """For every subcube, the minimum of a per-point array over its points."""
    return extend(np.asarray(point_values), n, np.minimum)


def constant_subcube_min_codim(const: np.ndarray, n: int) -> np.ndarray:
    """Least codimension of a constant subcube (this is C_min); batched."""
    codim = np.broadcast_to(codim_table(n), const.shape)
    g = np.where(const >= 0, codim, np.int16(n + 1))
    return g.reshape(g.shape[: g.ndim - n] + (-1,)).min(axis=-1)


class BlockIndexer:
    """Builds numpy index tuples for the block of subcubes with free mask F."""

    def __init__(self, n: int):
        self.n = n

    def block(self, mask: int, override: tuple[int, int] | None = None) -> tuple:
        n = self.n
        idx = [slice(0, 2)] * n
        for v in range(n):
            if mask >> v & 1:
                idx[n - 1 - v] = 2
        if override is not None:
            v, b = override
            idx[n - 1 - v] = b
        return (Ellipsis,) + tuple(idx)

    def children(self, mask: int):
        """Yield (v, index of child with v=0, index of child with v=1) for free v."""
        n = self.n
        base = [slice(0, 2)] * n
        for v in range(n):
            if mask >> v & 1:
                base[n - 1 - v] = 2
        for v in range(n):
            if mask >> v & 1:
                pos = n - 1 - v
                i0 = list(base)
                i0[pos] = 0
                i1 = list(base)
                i1[pos] = 1
                yield v, (Ellipsis,) + tuple(i0), (Ellipsis,) + tuple(i1)


def dt_table(const: np.ndarray, n: int) -> np.ndarray:
    """Decision-tree depth of f restricted to every subcube.

    DT(rho) = 0 if f is constant on rho, else
    1 + min over free v of max(DT(rho, v=0), DT(rho, v=1)).
    """
    out = np.where(const >= 0, 0, n + 1).astype(np.int16)
    ix = BlockIndexer(n)
    for mask in range(1, 1 << n):
        blk = ix.block(mask)
        c = const[blk]
        if (c >= 0).all():
            continue
        best = None
        for _, i0, i1 in ix.children(mask):
            m = np.maximum(out[i0], out[i1])
            best = m if best is None else np.minimum(best, m)
        out[blk] = np.where(c >= 0, 0, best + 1)
    return out


def slack_table(const: np.ndarray, mincert: np.ndarray, n: int, num: int, den: int) -> np.ndarray:
    """Query-budget slack of every subcube for the ratio num/den.

    A subcube rho reached after |fixed(rho)| queries has slack s >= 0 iff some
    subtree rooted at rho answers every x in rho within (num/den) * C(f, x)
    total queries, and s is then the largest number of extra queries that
    could be absorbed. For a constant rho the tree stops:
        s = floor(num * min_{x in rho} C(f, x) / den) - |fixed(rho)|.
    Otherwise s = max over free v of min(s(rho, v=0), s(rho, v=1)).
    Negative slack is clamped to BOTTOM and stays there.
    """
    codim = np.broadcast_to(codim_table(n), const.shape)
    leaf = (num * mincert.astype(np.int32)) // den - codim
    out = np.where(const >= 0, np.maximum(leaf, BOTTOM), BOTTOM).astype(np.int16)
    ix = BlockIndexer(n)
    for mask in range(1, 1 << n):
        blk = ix.block(mask)
        c = const[blk]
        if (c >= 0).all():
            continue
        best = None
        for _, i0, i1 in ix.children(mask):
            m = np.minimum(out[i0], out[i1])
            best = m if best is None else np.maximum(best, m)
        out[blk] = np.where(c >= 0, out[blk], best)
    return out
