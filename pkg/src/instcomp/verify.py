"""Exhaustive checks of the closed-form results at small sizes.

Each ``check_*`` function returns a list of :class:`Check` records, one per
instance (plus the universal-bound checks run on every function it builds).
The CLI ``verify`` command and the acceptance tests both consume them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

import numpy as np

from . import families as fam
from .algorithms import gt_adversary, gt_tree, naive_full_tree, omb_tree, ind_tree, run_adversary
from .boolfn import TruthTable, input_bits
from .instc import candidate_ratios, feasible, instc_exact, instc_oracle, instc_wrt, _SolverState
from .measures import (
    certificate_complexities,
    cmin,
    cmin_clique_formula,
    cmin_conn_formula,
    cmin_symmetric,
    degree,
    dt,
    dt_batch,
    mobius,
    symmetric_interval,
)
from .trees import check_computes, computes


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


def fmt(r) -> str:
    if isinstance(r, Fraction):
        return f"{r.numerator}/{r.denominator}"
    return str(r)


def universal_bounds(label: str, f: TruthTable, instc: Fraction | None = None, slow: bool = False) -> Check:
    """cmin <= C(f, x) <= C(f) for all x, dt >= deg, and instc <= dt / cmin."""
    certs = certificate_complexities(f, slow)
    c_min, c_max = int(certs.min()), int(certs.max())
    ok = c_min == cmin(f, slow=slow) and bool((certs >= c_min).all() and (certs <= c_max).all())
    d = dt(f, slow=slow)
    deg = degree(f)
    ok = ok and d >= deg
    parts = [f"cmin={c_min}", f"C={c_max}", f"dt={d}", f"deg={deg}"]
    if instc is not None and c_min > 0:
        ok = ok and instc * c_min <= d
        parts.append(f"instc={fmt(instc)}<=dt/cmin={fmt(Fraction(d, c_min))}")
    return Check(f"bounds {label}", ok, " ".join(parts))


# -- symmetric functions ----------------------------------------------------

def check_symmetric(n: int) -> list[Check]:
    """Theorem for symmetric f (every non-constant predicate) and the C_min claim."""
    out = []
    for pred in product((0, 1), repeat=n + 1):
        f = fam.symmetric(pred)
        iv = symmetric_interval(pred)
        formula_cmin = cmin_symmetric(pred, n)
        brute_cmin = cmin(f)
        label = f"n={n} D={''.join(map(str, pred))}"
        ok = formula_cmin == brute_cmin
        detail = f"[ell0,ell1]=[{iv.ell0},{iv.ell1}] cmin formula={formula_cmin} brute={brute_cmin}"
        if len(set(pred)) > 1:
            value = instc_exact(f).value
            expected = Fraction(n, formula_cmin)
            ok = ok and value == expected
            naive = instc_wrt(f, naive_full_tree(f))
            ok = ok and naive == expected
            detail += f" instc={fmt(value)} n/cmin={fmt(expected)} naive={fmt(naive)}"
            bounds = universal_bounds(label, f, value)
            ok = ok and bounds.passed
        out.append(Check(f"symmetric {label}", ok, detail))
    return out


def check_symmetric_claim(n: int) -> list[Check]:
    """Only the C_min closed form, over all predicates (constant ones included)."""
    out = []
    for pred in product((0, 1), repeat=n + 1):
        f = fam.symmetric(pred)
        a, b = cmin_symmetric(pred, n), cmin(f)
        out.append(Check(f"cmin-claim n={n} D={''.join(map(str, pred))}", a == b, f"formula={a} brute={b}"))
    return out


# -- graph properties -------------------------------------------------------

def check_conn(vertices: int) -> list[Check]:
    f = fam.conn(vertices)
    m = comb(vertices, 2)
    d, c = dt(f), cmin(f)
    value = instc_exact(f).value
    expected = Fraction(m, vertices - 1)
    return [
        Check(f"conn V={vertices} evasive", d == m, f"dt={d} binom(V,2)={m}"),
        Check(f"conn V={vertices} cmin", c == cmin_conn_formula(vertices), f"cmin={c} V-1={vertices - 1}"),
        Check(f"conn V={vertices} instc", value == expected, f"instc={fmt(value)} expected={fmt(expected)}"),
        universal_bounds(f"conn V={vertices}", f, value),
    ]


def check_clique(vertices: int, k: int, slow: bool = False) -> list[Check]:
    f = fam.clique(vertices, k)
    m = comb(vertices, 2)
    d, c = dt(f, slow=slow), cmin(f, slow=slow)
    formula = cmin_clique_formula(vertices, k)
    value = instc_exact(f, slow=slow).value
    expected = Fraction(m, c)
    out = [
        Check(f"clique V={vertices} k={k} evasive", d == m, f"dt={d} binom(V,2)={m}"),
        Check(f"clique V={vertices} k={k} cmin", c == formula, f"cmin={c} formula={formula}"),
    ]
    if c == comb(k, 2):
        # the clique certificate is the smallest one, and the closed form applies
        out.append(Check(f"clique V={vertices} k={k} instc", value == expected,
                         f"instc={fmt(value)} dt/cmin={fmt(expected)}"))
    out.append(universal_bounds(f"clique V={vertices} k={k}", f, value, slow=slow))
    return out


def check_clique_formula_small(vertices: int, k: int) -> Check:
    """C_min closed form against brute force without solving InstC."""
    f = fam.clique(vertices, k)
    a, b = cmin_clique_formula(vertices, k), cmin(f, slow=True)
    return Check(f"clique-cmin V={vertices} k={k}", a == b, f"formula={a} brute={b}")


# -- Greater-Than -----------------------------------------------------------

def gt_disagreement(index: int, n: int) -> int | None:
    """j such that n-j is the top index with x_i != y_i, or None when x = y."""
    bits = input_bits(index, 2 * n)
    for i in range(n, 0, -1):
        if bits[i - 1] != bits[n + i - 1]:
            return n - i
    return None


def check_gt(n: int) -> list[Check]:
    f = fam.gt(n)
    tree = gt_tree(n)
    out = []
    d = dt(f)
    run = run_adversary(tree, gt_adversary(n))
    out.append(Check(f"gt n={n} dt", d == 2 * n, f"dt={d} 2n={2 * n}"))
    out.append(Check(f"gt n={n} adversary", run.depth == 2 * n, f"forced depth={run.depth}"))
    c = cmin(f)
    out.append(Check(f"gt n={n} cmin", c == 2, f"cmin={c}"))
    witness = f((0,) * (n - 1) + (1,) + (0,) * n) == 1 and certificate_complexities(f)[1 << (n - 1)] == 2
    out.append(Check(f"gt n={n} cmin witness 0^(n-1)10^n", bool(witness)))
    ok_computes = computes(tree, f)
    out.append(Check(f"gt n={n} gt_tree computes", ok_computes))
    queries = check_computes(tree, f) if ok_computes else None
    certs = certificate_complexities(f)
    if queries is not None:
        ratio = instc_wrt(f, tree, certs)
        out.append(Check(f"gt n={n} instc_wrt(gt_tree)", ratio == 2, f"{fmt(ratio)} (<= 2, attained)"))
        bad_q, bad_c = [], []
        for idx in range(1 << (2 * n)):
            j = gt_disagreement(idx, n)
            q, cx = int(queries[idx]), int(certs[idx])
            if j is None:
                if q not in (2 * n - 1, 2 * n):
                    bad_q.append(idx)
                if cx != n:
                    bad_c.append(idx)
            else:
                if q not in (2 * j + 1, 2 * j + 2):
                    bad_q.append(idx)
                if cx not in (j + 1, j + 2):
                    bad_c.append(idx)
        out.append(Check(f"gt n={n} query counts per class", not bad_q, f"{len(bad_q)} violations"))
        out.append(Check(f"gt n={n} certificate classes", not bad_c, f"{len(bad_c)} violations"))
    value = instc_exact(f).value
    out.append(universal_bounds(f"gt n={n}", f, value))
    out.append(Check(f"gt n={n} separation", Fraction(d, c) == n and value <= 2,
                     f"dt/cmin={fmt(Fraction(d, c))} instc={fmt(value)}"))
    return out


# -- Odd-Max-Bit ------------------------------------------------------------

def omb_class_certificate(index: int, n: int) -> int:
    """Certificate size of OMB_n (n odd) at an input, as derived by hand."""
    if index == 0:
        return (n + 1) // 2
    i = n - index.bit_length()  # top 1 at position n - i
    return (i + 3) // 2 if i % 2 else (i + 2) // 2


def check_omb(n: int) -> list[Check]:
    f = fam.omb(n)
    tree = omb_tree(n)
    out = []
    d, c = dt(f), cmin(f)
    exp = mobius(f)
    deg = exp.degree()
    top = int(exp.coeffs[(1 << n) - 1])
    out.append(Check(f"omb n={n} dt", d == n, f"dt={d}"))
    out.append(Check(f"omb n={n} cmin", c == 1, f"cmin={c}"))
    out.append(Check(f"omb n={n} degree", deg == n and top == (-1) ** (n + 1), f"deg={deg} top coefficient={top}"))
    out.append(Check(f"omb n={n} mobius reconstruction", bool(np.array_equal(exp.reconstruct(), f.bits))))
    ok_computes = computes(tree, f)
    out.append(Check(f"omb n={n} omb_tree computes", ok_computes))
    certs = certificate_complexities(f)
    if ok_computes:
        ratio = instc_wrt(f, tree, certs)
        expected = Fraction(2 * n, n + 1)
        out.append(Check(f"omb n={n} instc_wrt(omb_tree)", ratio == expected and ratio < 2,
                         f"{fmt(ratio)} expected {fmt(expected)}"))
        queries = check_computes(tree, f)
        bad_c, bad_q = 0, 0
        for idx in range(1 << n):
            if int(certs[idx]) != omb_class_certificate(idx, n):
                bad_c += 1
            expected_q = n if idx == 0 else n - idx.bit_length() + 1
            if int(queries[idx]) != expected_q:
                bad_q += 1
        out.append(Check(f"omb n={n} certificate classes", bad_c == 0, f"{bad_c} violations"))
        out.append(Check(f"omb n={n} query counts", bad_q == 0, f"{bad_q} violations"))
    value = instc_exact(f).value
    out.append(universal_bounds(f"omb n={n}", f, value))
    out.append(Check(f"omb n={n} separation", Fraction(d, c) == n and value < 2,
                     f"dt/cmin={fmt(Fraction(d, c))} instc={fmt(value)}"))
    return out


# -- baselines --------------------------------------------------------------

def maj_instc(n: int) -> Fraction:
    return Fraction(2 * n, n + 1) if n % 2 else Fraction(2)


def check_gkn(ns=range(2, 11), ms=(1, 2)) -> list[Check]:
    out = []
    for n in ns:
        for name, f, expected in (
            ("xor", fam.xor(n), Fraction(1)),
            ("and", fam.and_(n), Fraction(n)),
            ("or", fam.or_(n), Fraction(n)),
            ("maj", fam.maj(n), maj_instc(n)),
        ):
            value = instc_exact(f).value
            out.append(Check(f"gkn {name} n={n}", value == expected, f"instc={fmt(value)} expected={fmt(expected)}"))
            out.append(universal_bounds(f"{name} n={n}", f, value))
    for m in ms:
        f = fam.ind(m)
        result = instc_exact(f)
        wrt = instc_wrt(f, ind_tree(m))
        out.append(Check(f"gkn ind m={m}", result.value == 1 and wrt == 1,
                         f"instc={fmt(result.value)} ind_tree={fmt(wrt)}"))
        out.append(universal_bounds(f"ind m={m}", f, result.value))
    return out


# -- dt >= deg --------------------------------------------------------------

def degree_batch(bits: np.ndarray, n: int) -> np.ndarray:
    a = bits.astype(np.int64).reshape((bits.shape[0],) + (2,) * n).copy()
    for v in range(n):
        view = np.moveaxis(a, a.ndim - 1 - v, 0)
        view[1] = view[1] - view[0]
    flat = a.reshape(bits.shape[0], -1)
    weights = np.array([int(m).bit_count() for m in range(1 << n)])
    return np.where(flat != 0, weights, 0).max(axis=1)


def check_deg_lb(exhaustive_max: int = 4, random_ns=range(5, 11), per_n: int = 1700, seed: int = 0,
                 chunk: int = 256) -> list[Check]:
    out = []
    for n in range(1, exhaustive_max + 1):
        total = 1 << (1 << n)
        ok, worst_gap = True, None
        for start in range(0, total, 1 << 14):
            ids = np.arange(start, min(total, start + (1 << 14)), dtype=np.int64)
            bits = ((ids[:, None] >> np.arange(1 << n)) & 1).astype(np.uint8)
            gap = dt_batch(bits, n) - degree_batch(bits, n)
            ok = ok and bool((gap >= 0).all())
            worst_gap = int(gap.min()) if worst_gap is None else min(worst_gap, int(gap.min()))
        out.append(Check(f"deg-lb exhaustive n={n}", ok, f"{total} functions, min(dt-deg)={worst_gap}"))
    rng = np.random.default_rng(seed)
    for n in random_ns:
        ok, count = True, 0
        for start in range(0, per_n, chunk):
            size = min(chunk, per_n - start)
            bits = rng.integers(0, 2, size=(size, 1 << n), dtype=np.uint8)
            gap = dt_batch(bits, n) - degree_batch(bits, n)
            ok = ok and bool((gap >= 0).all())
            count += size
        out.append(Check(f"deg-lb random n={n}", ok, f"{count} functions (seed {seed})"))
    return out


# -- oracle equivalence -----------------------------------------------------

def _oracle_one(f: TruthTable, label: str) -> Check:
    result = instc_exact(f)
    oracle = instc_oracle(f)
    ok = result.value == oracle
    ok = ok and instc_wrt(f, result.tree) == result.value
    if not f.is_constant():
        state = _SolverState.build(f)
        flags = [feasible(f, r, _state=state) for r in candidate_ratios(f, state.certs)]
        # once feasible, feasible for every larger candidate
        ok = ok and flags == sorted(flags)
        ok = ok and universal_bounds(label, f, result.value).passed
    return Check(f"oracle {label}", ok, f"solver={fmt(result.value)} oracle={fmt(oracle)}")


def check_oracle(n: int, random_count: int = 0, seed: int = 0) -> list[Check]:
    out = []
    if n <= 3:
        for code in range(1 << (1 << n)):
            bits = [(code >> i) & 1 for i in range(1 << n)]
            out.append(_oracle_one(TruthTable(n, bits), f"n={n} f={''.join(map(str, bits))}"))
    if random_count:
        rng = np.random.default_rng(seed)
        for _ in range(random_count):
            bits = rng.integers(0, 2, 1 << n, dtype=np.uint8)
            out.append(_oracle_one(TruthTable(n, bits), f"n={n} f={''.join(map(str, bits))}"))
    return out


def summary(checks: list[Check]) -> str:
    passed = sum(c.passed for c in checks)
    if passed == len(checks):
        return f"PASS {passed}/{len(checks)}"
    return f"FAIL {passed}/{len(checks)}"
