"""Exact classical complexity measures of explicit Boolean functions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import lattice
from .boolfn import TruthTable, input_bits, input_index
from .errors import CapExceededError, FamilyParameterError

CERT_CAP = 16
LATTICE_CAP = 13
SLOW_CAP = 15
DEGREE_CAP = 20


def lattice_cap(slow: bool = False) -> int:
    return SLOW_CAP if slow else LATTICE_CAP


def _require(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceededError(what, n, cap)


# -- certificates -----------------------------------------------------------

def certificate(f: TruthTable, x) -> tuple[int, ...]:
    """A smallest certificate for ``x``: variables (0-indexed) fixing f.

    Subsets are tried by size, then lexicographically, and the first subset on
    which f is constant is returned. The empty tuple means f is constant.
    """
    _require(f.n, CERT_CAP, "certificate_complexity")
    n = f.n
    bits = input_bits(input_index(x, n), n)
    cube = f.cube()
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            idx = [slice(None)] * n
            for v in subset:
                idx[n - 1 - v] = bits[v]
            block = cube[tuple(idx)]
            if block.min() == block.max():
                return subset
    raise AssertionError("unreachable: the full variable set is always a certificate")


def certificate_complexity(f: TruthTable, x) -> int:
    return len(certificate(f, x))


def certificate_complexities(f: TruthTable, slow: bool = False) -> np.ndarray:
    """C(f, x) for all 2^n inputs at once, via the constancy lattice."""
    _require(f.n, lattice_cap(slow), "certificate_complexities")
    return lattice.point_certificates(lattice.constancy_table(f), f.n).astype(np.int64)


def certificate_complexity_max(f: TruthTable, method: str = "auto", slow: bool = False) -> int:
    """C(f) = max_x C(f, x)."""
    if method == "auto":
        method = "lattice" if f.n <= lattice_cap(slow) else "search"
    if method == "lattice":
        return int(certificate_complexities(f, slow).max())
    if method == "search":
        _require(f.n, CERT_CAP, "certificate_complexity_max")
        return max(certificate_complexity(f, i) for i in range(1 << f.n))
    raise ValueError(f"unknown method {method!r}")


def cmin(f: TruthTable, method: str = "auto", slow: bool = False) -> int:
    """C_min(f): least codimension of a subcube on which f is constant."""
    if method == "auto":
        method = "lattice" if f.n <= lattice_cap(slow) else "search"
    if method == "lattice":
        _require(f.n, lattice_cap(slow), "cmin")
        return int(lattice.constant_subcube_min_codim(lattice.constancy_table(f), f.n))
    if method == "search":
        _require(f.n, CERT_CAP, "cmin")
        return min(certificate_complexity(f, i) for i in range(1 << f.n))
    raise ValueError(f"unknown method {method!r}")


def dt(f: TruthTable, slow: bool = False) -> int:
    """Deterministic decision-tree complexity by memoized minimax over subcubes."""
    _require(f.n, lattice_cap(slow), "dt")
    table = lattice.dt_table(lattice.constancy_table(f), f.n)
    return int(table.reshape(-1)[-1])


def dt_batch(bits: np.ndarray, n: int) -> np.ndarray:
    """DT for a batch of tables, ``bits`` of shape (B, 2^n)."""
    _require(n, LATTICE_CAP, "dt")
    table = lattice.dt_table(lattice.constancy_batch(bits, n), n)
    return table.reshape(table.shape[0], -1)[:, -1].astype(np.int64)


# -- Mobius expansion -------------------------------------------------------

@dataclass(frozen=True)
class MobiusExpansion:
    """f(x) = sum over S of coeffs[S] * prod_{i in S} x_i.

    ``coeffs`` is indexed by the bitmask of S (bit v set iff x_{v+1} in S).
    """

    n: int
    coeffs: np.ndarray

    @property
    def coefficients(self) -> dict[frozenset[int], int]:
        """Non-zero coefficients keyed by 0-indexed variable sets."""
        return {
            frozenset(v for v in range(self.n) if mask >> v & 1): int(c)
            for mask, c in enumerate(self.coeffs)
            if c != 0
        }

    def degree(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        if nz.size == 0:
            return 0
        return max(int(m).bit_count() for m in nz)

    def evaluate(self, x) -> int:
        idx = input_index(x, self.n)
        # sum over subsets of the support of x
        total = 0
        sub = idx
        while True:
            total += int(self.coeffs[sub])
            if sub == 0:
                break
            sub = (sub - 1) & idx
        return total

    def reconstruct(self) -> np.ndarray:
        """Values at all inputs via the zeta transform (inverse of the Mobius step)."""
        a = self.coeffs.astype(np.int64).reshape((2,) * self.n).copy()
        for v in range(self.n):
            view = np.moveaxis(a, a.ndim - 1 - v, 0)
            view[1] = view[1] + view[0]
        return a.reshape(-1)


def mobius(f: TruthTable) -> MobiusExpansion:
    _require(f.n, DEGREE_CAP, "mobius")
    a = f.bits.astype(np.int64).reshape((2,) * f.n).copy()
    for v in range(f.n):
        view = np.moveaxis(a, a.ndim - 1 - v, 0)
        view[1] = view[1] - view[0]
    return MobiusExpansion(f.n, a.reshape(-1))


def degree(f: TruthTable) -> int:
    return mobius(f).degree()


# -- closed forms -----------------------------------------------------------

@dataclass(frozen=True)
class SymmetricInterval:
    ell0: int
    ell1: int

    @property
    def length(self) -> int:
        return self.ell1 - self.ell0


def symmetric_interval(predicate) -> SymmetricInterval:
    """Longest run of equal predicate values; the leftmost one on ties."""
    pred = [int(b) for b in predicate]
    if not pred:
        raise ValueError("empty predicate")
    best = (0, 0)
    start = 0
    for i in range(1, len(pred) + 1):
        if i == len(pred) or pred[i] != pred[start]:
            if i - 1 - start > best[1] - best[0]:
                best = (start, i - 1)
            start = i
    return SymmetricInterval(*best)


def cmin_symmetric(predicate, n: int | None = None) -> int:
    pred = list(predicate)
    if n is None:
        n = len(pred) - 1
    if len(pred) != n + 1:
        raise ValueError(f"predicate must have n+1={n + 1} entries, got {len(pred)}")
    iv = symmetric_interval(pred)
    return iv.ell0 + n - iv.ell1


def turan_bound(n: int, k: int) -> int:
    """Largest edge count of a K_k-free graph, floor(n^2 (k-2) / (2 (k-1)))."""
    if not 2 <= k <= n:
        raise FamilyParameterError(f"need 2 <= k <= n, got n={n}, k={k}")
    return n * n * (k - 2) // (2 * (k - 1))


def cmin_clique_formula(n: int, k: int) -> int:
    return min(comb(k, 2), comb(n, 2) - turan_bound(n, k))


def cmin_conn_formula(n: int) -> int:
    if n < 2:
        raise FamilyParameterError(f"need n >= 2 vertices, got {n}")
    return n - 1
