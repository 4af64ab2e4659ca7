"""Instance complexity: of a given tree, exactly by search, and by brute force.

All ratios are exact ``fractions.Fraction`` values. A tree that makes queries
on an input whose certificate is empty (f constant) has unbounded ratio,
represented by :data:`UNBOUNDED`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import NamedTuple

import numpy as np

from . import lattice
from .boolfn import TruthTable, input_index
from .errors import CapExceededError
from .measures import CERT_CAP, certificate_complexities, certificate_complexity, lattice_cap, cmin_symmetric
from .trees import DecisionTree, Leaf, Query, QueryAlgorithm, check_computes

Ratio = Fraction
ORACLE_CAP = 4


@total_ordering
class _Unbounded:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("instcomp.UNBOUNDED")

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


def ratio(queries: int, cert: int) -> Fraction | _Unbounded:
    """queries / cert, with 0/0 taken as 0 and q/0 (q > 0) as unbounded."""
    if cert == 0:
        return Fraction(0) if queries == 0 else UNBOUNDED
    return Fraction(int(queries), int(cert))


def _certs(f: TruthTable, slow: bool = False) -> np.ndarray:
    if f.n <= lattice_cap(slow):
        return certificate_complexities(f, slow)
    if f.n > CERT_CAP:
        raise CapExceededError("certificates", f.n, CERT_CAP)
    return np.array([certificate_complexity(f, i) for i in range(1 << f.n)], dtype=np.int64)


def _max_ratio(queries: np.ndarray, certs: np.ndarray):
    best = Fraction(0)
    for q, c in set(zip(queries.tolist(), certs.tolist())):
        r = ratio(q, c)
        if r > best:
            best = r
    return best


def instc_at(f: TruthTable, x, tree: QueryAlgorithm):
    """InstC(f, x, T) = T(x) / C(f, x)."""
    queries = check_computes(tree, f)
    idx = input_index(x, f.n)
    return ratio(int(queries[idx]), certificate_complexity(f, idx))


def instc_wrt(f: TruthTable, tree: QueryAlgorithm, certs: np.ndarray | None = None, slow: bool = False):
    """InstC(f, T) = max over inputs of T(x) / C(f, x)."""
    queries = check_computes(tree, f)
    if certs is None:
        certs = _certs(f, slow)
    return _max_ratio(queries, certs)


def per_input_ratios(f: TruthTable, tree: QueryAlgorithm, certs: np.ndarray | None = None):
    """(queries, certificates) arrays over all inputs, after a computes-check."""
    queries = check_computes(tree, f)
    if certs is None:
        certs = _certs(f)
    return queries, certs


def candidate_ratios(f: TruthTable, certs: np.ndarray | None = None) -> list[Fraction]:
    """Every value d/c an InstC(f, T) could take: d a depth, c an attained C(f, x)."""
    if f.is_constant():
        raise ValueError("candidate ratios are defined for non-constant functions")
    if certs is None:
        certs = _certs(f)
    sizes = sorted(set(int(c) for c in certs))
    return sorted({Fraction(d, c) for d in range(f.n + 1) for c in sizes})


@dataclass
class _SolverState:
    f: TruthTable
    const: np.ndarray
    certs: np.ndarray
    mincert: np.ndarray

    @classmethod
    def build(cls, f: TruthTable, slow: bool = False) -> "_SolverState":
        cap = lattice_cap(slow)
        if f.n > cap:
            raise CapExceededError("instc solver", f.n, cap)
        const = lattice.constancy_table(f)
        certs = lattice.point_certificates(const, f.n)
        return cls(f, const, certs.astype(np.int64), lattice.subcube_min(certs, f.n))

    def slack(self, r: Fraction) -> np.ndarray:
        return lattice.slack_table(self.const, self.mincert, self.f.n, r.numerator, r.denominator)


def feasible(f: TruthTable, r: Fraction, slow: bool = False, _state: _SolverState | None = None) -> bool:
    """Whether some tree computing f makes at most r * C(f, x) queries on every x."""
    r = Fraction(r)
    state = _state or _SolverState.build(f, slow)
    return int(state.slack(r).reshape(-1)[-1]) >= 0


def _witness(state: _SolverState, slack: np.ndarray) -> DecisionTree:
    n = state.f.n
    const = state.const

    def rec(idx: list):
        key = tuple(idx)
        value = int(const[key])
        if value >= 0:
            return Leaf(value)
        best_v, best_s = None, None
        for v in range(n):
            pos = n - 1 - v
            if idx[pos] != 2:
                continue
            idx[pos] = 0
            s0 = int(slack[tuple(idx)])
            idx[pos] = 1
            s1 = int(slack[tuple(idx)])
            idx[pos] = 2
            s = min(s0, s1)
            if best_s is None or s > best_s:
                best_v, best_s = v, s
        pos = n - 1 - best_v
        idx[pos] = 0
        zero = rec(idx)
        idx[pos] = 1
        one = rec(idx)
        idx[pos] = 2
        return Query(best_v, zero, one)

    return DecisionTree(n, rec([2] * n), name="witness")


class InstCResult(NamedTuple):
    value: Fraction
    tree: DecisionTree


def instc_exact(f: TruthTable, slow: bool = False) -> InstCResult:
    """Exact InstC(f) with a witness tree attaining it.

    Binary search over :func:`candidate_ratios` with :func:`feasible`; the
    largest candidate n / C_min(f) is always feasible (query everything).
    """
    if f.is_constant():
        if f.n > lattice_cap(slow):
            raise CapExceededError("instc solver", f.n, lattice_cap(slow))
        return InstCResult(Fraction(0), DecisionTree(f.n, Leaf(int(f.bits[0])), name="witness"))
    state = _SolverState.build(f, slow)
    cands = candidate_ratios(f, state.certs)
    lo, hi = 0, len(cands) - 1
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        s = state.slack(cands[mid])
        if int(s.reshape(-1)[-1]) >= 0:
            best = (mid, s)
            hi = mid - 1
        else:
            lo = mid + 1
    if best is None:
        raise AssertionError("largest candidate ratio must be feasible")
    mid, s = best
    return InstCResult(cands[mid], _witness(state, s))


# -- brute-force oracle -----------------------------------------------------

def instc_oracle(f: TruthTable):
    """InstC(f) by exhausting all decision trees on at most 4 variables.

    Trees are generated bottom-up per subcube and recorded by their vector of
    query counts over all inputs (trees with equal vectors are interchangeable
    for InstC). A leaf is admitted only where f is constant with that value,
    which is exactly the set of trees that compute f. Certificates come from
    the direct subset search, not from the lattice.
    """
    n = f.n
    if n > ORACLE_CAP:
        raise CapExceededError("instc_oracle", n, ORACLE_CAP)
    size = 1 << n
    bits = f.bits.tolist()
    certs = [certificate_complexity(f, i) for i in range(size)]
    memo: dict[tuple, frozenset] = {}

    def members(fixed):
        return [i for i in range(size) if all((i >> v) & 1 == b for v, b in fixed)]

    def profiles(fixed: tuple) -> frozenset:
        if fixed in memo:
            return memo[fixed]
        pts = members(fixed)
        inside = [0] * size
        for i in pts:
            inside[i] = 1
        out = set()
        if len({bits[i] for i in pts}) == 1:
            out.add((0,) * size)
        fixed_vars = {v for v, _ in fixed}
        for v in range(n):
            if v in fixed_vars:
                continue
            zero = profiles(tuple(sorted(fixed + ((v, 0),))))
            one = profiles(tuple(sorted(fixed + ((v, 1),))))
            for p0 in zero:
                for p1 in one:
                    out.add(tuple(a + b + m for a, b, m in zip(p0, p1, inside)))
        memo[fixed] = frozenset(out)
        return memo[fixed]

    best = None
    for prof in profiles(()):
        worst = Fraction(0)
        for q, c in zip(prof, certs):
            r = ratio(q, c)
            if r > worst:
                worst = r
        if best is None or worst < best:
            best = worst
    return best


def enumerate_trees(n: int, free: tuple[int, ...] | None = None):
    """Every decision tree over the given free variables (no repeats per path)."""
    if free is None:
        free = tuple(range(n))
    yield Leaf(0)
    yield Leaf(1)
    for v in free:
        rest = tuple(u for u in free if u != v)
        subtrees = list(enumerate_trees(n, rest))
        for zero in subtrees:
            for one in subtrees:
                yield Query(v, zero, one)


def symmetric_instc_formula(predicate, n: int | None = None) -> Fraction:
    """n / (ell0 + n - ell1); 0 for a constant predicate."""
    pred = list(predicate)
    if n is None:
        n = len(pred) - 1
    if len(set(pred)) == 1:
        return Fraction(0)
    return Fraction(n, cmin_symmetric(pred, n))
