"""Constructors for the function families studied here.

Variable layouts:

* ``gt``: (x_1..x_n, y_1..y_n); x_n and y_n carry the largest weight 2^n.
* ``ind``: (x_1..x_m, y_1..y_{2^m}); the addressed target is
  y_{bin(x)} with bin(x) = 1 + sum_i 2^(i-1) x_i.
* ``conn``/``clique``: one variable per edge (u, v), u < v, vertices 1..V,
  in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .boolfn import CORE_CAP, TruthTable, hamming_weights
from .errors import CapExceededError, FamilyParameterError

FAMILIES = ("xor", "and", "or", "maj", "ind", "symmetric", "gt", "omb", "conn", "clique")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    m: int | None = None
    predicate: tuple[int, ...] | None = None
    vertices: int | None = None
    k: int | None = None

    def describe(self) -> dict:
        out = {"family": self.family}
        for name in ("n", "m", "vertices", "k"):
            val = getattr(self, name)
            if val is not None:
                out[name] = val
        if self.predicate is not None:
            out["predicate"] = "".join(map(str, self.predicate))
        return out

    def label(self) -> str:
        d = self.describe()
        params = ",".join(f"{k}={v}" for k, v in d.items() if k != "family")
        return f"{self.family}({params})"


def _need(value, name: str, family: str) -> int:
    if value is None:
        raise FamilyParameterError(f"family {family!r} requires parameter {name!r}")
    return int(value)


def _arity_check(n: int, family: str, lo: int = 1) -> None:
    if n < lo:
        raise FamilyParameterError(f"{family}: need n >= {lo}, got {n}")
    if n > CORE_CAP:
        raise CapExceededError(family, n, CORE_CAP)


def symmetric(predicate) -> TruthTable:
    predicate = np.asarray(predicate, dtype=np.uint8)
    n = len(predicate) - 1
    _arity_check(n, "symmetric", lo=0)
    if predicate.max(initial=0) > 1:
        raise FamilyParameterError("symmetric predicate entries must be 0/1")
    return TruthTable(n, predicate[hamming_weights(n)])


def xor(n: int) -> TruthTable:
    return symmetric([k % 2 for k in range(n + 1)])


def and_(n: int) -> TruthTable:
    return symmetric([int(k == n) for k in range(n + 1)])


def or_(n: int) -> TruthTable:
    return symmetric([int(k >= 1) for k in range(n + 1)])


def maj(n: int) -> TruthTable:
    # 1 iff #ones >= #zeros; ties go to 1
    return symmetric([int(k >= n - k) for k in range(n + 1)])


def ind(m: int) -> TruthTable:
    if m < 1:
        raise FamilyParameterError(f"ind: need m >= 1, got {m}")
    n = m + (1 << m)
    if n > CORE_CAP:
        raise CapExceededError("ind", n, CORE_CAP)
    idx = np.arange(1 << n)
    address = idx & ((1 << m) - 1)
    return TruthTable(n, (idx >> (m + address)) & 1)


def gt(n: int) -> TruthTable:
    _arity_check(2 * n, "gt", lo=2)
    idx = np.arange(1 << (2 * n))
    x = idx & ((1 << n) - 1)
    y = idx >> n
    return TruthTable(2 * n, (x > y).astype(np.uint8))


def omb(n: int) -> TruthTable:
    _arity_check(n, "omb")
    idx = np.arange(1 << n)
    # bit_length gives the 1-indexed position of the highest set variable; 0 for 0^n
    top = np.array([int(i).bit_length() for i in idx])
    return TruthTable(n, (top % 2).astype(np.uint8))


def edges(vertices: int) -> list[tuple[int, int]]:
    """Edge variables in lexicographic order, vertices numbered from 1."""
    return list(combinations(range(1, vertices + 1), 2))


def _graph_table(vertices: int, family: str, prop) -> TruthTable:
    if vertices < 2:
        raise FamilyParameterError(f"{family}: need at least 2 vertices, got {vertices}")
    es = edges(vertices)
    n = len(es)
    if n > CORE_CAP:
        raise CapExceededError(family, n, CORE_CAP)
    bits = np.zeros(1 << n, dtype=np.uint8)
    for idx in range(1 << n):
        present = [e for j, e in enumerate(es) if idx >> j & 1]
        bits[idx] = prop(present)
    return TruthTable(n, bits)


def is_connected(vertices: int, present) -> bool:
    parent = list(range(vertices + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    components = vertices
    for u, v in present:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return components == 1


def has_clique(vertices: int, k: int, present) -> bool:
    adj = set(present)
    for group in combinations(range(1, vertices + 1), k):
        if all(pair in adj for pair in combinations(group, 2)):
            return True
    return False


def conn(vertices: int) -> TruthTable:
    return _graph_table(vertices, "conn", lambda present: is_connected(vertices, present))


def clique(vertices: int, k: int) -> TruthTable:
    if not 2 <= k <= vertices:
        raise FamilyParameterError(f"clique: need 2 <= k <= vertices, got k={k}, vertices={vertices}")
    return _graph_table(vertices, "clique", lambda present: has_clique(vertices, k, present))


_ALLOWED = {
    "xor": {"n"}, "and": {"n"}, "or": {"n"}, "maj": {"n"}, "ind": {"m"},
    "symmetric": {"n", "predicate"}, "gt": {"n"}, "omb": {"n"},
    "conn": {"vertices"}, "clique": {"vertices", "k"},
}


def make_family(spec: FamilySpec) -> TruthTable:
    fam = spec.family
    if fam in _ALLOWED:
        extra = sorted(name for name in ("n", "m", "predicate", "vertices", "k")
                       if getattr(spec, name) is not None and name not in _ALLOWED[fam])
        if extra:
            raise FamilyParameterError(f"family {fam!r} does not take {', '.join(extra)}")
    if fam == "xor":
        n = _need(spec.n, "n", fam)
        _arity_check(n, fam)
        return xor(n)
    if fam == "and":
        n = _need(spec.n, "n", fam)
        _arity_check(n, fam)
        return and_(n)
    if fam == "or":
        n = _need(spec.n, "n", fam)
        _arity_check(n, fam)
        return or_(n)
    if fam == "maj":
        n = _need(spec.n, "n", fam)
        _arity_check(n, fam)
        return maj(n)
    if fam == "ind":
        return ind(_need(spec.m, "m", fam))
    if fam == "symmetric":
        if spec.predicate is None:
            raise FamilyParameterError("family 'symmetric' requires a predicate")
        if spec.n is not None and spec.n != len(spec.predicate) - 1:
            raise FamilyParameterError("symmetric: predicate length must be n+1")
        return symmetric(spec.predicate)
    if fam == "gt":
        return gt(_need(spec.n, "n", fam))
    if fam == "omb":
        return omb(_need(spec.n, "n", fam))
    if fam == "conn":
        return conn(_need(spec.vertices, "vertices", fam))
    if fam == "clique":
        return clique(_need(spec.vertices, "vertices", fam), _need(spec.k, "k", fam))
    raise FamilyParameterError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


def graph_variable_count(vertices: int) -> int:
    return comb(vertices, 2)
