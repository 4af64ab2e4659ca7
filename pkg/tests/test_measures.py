from functools import lru_cache
from itertools import product

import numpy as np
import pytest

from instcomp import families as fam
from instcomp import measures as M
from instcomp.boolfn import TruthTable
from instcomp.errors import CapExceededError

from conftest import random_table


def brute_dt(f: TruthTable) -> int:
    """Plain recursive minimax over restrictions, independent of the lattice code."""
    n = f.n

    @lru_cache(maxsize=None)
    def rec(fixed):
        pts = [i for i in range(1 << n) if all((i >> v) & 1 == b for v, b in fixed)]
        if len({int(f.bits[i]) for i in pts}) == 1:
            return 0
        used = {v for v, _ in fixed}
        return 1 + min(
            max(rec(tuple(sorted(fixed + ((v, 0),)))), rec(tuple(sorted(fixed + ((v, 1),)))))
            for v in range(n)
            if v not in used
        )

    return rec(())


def test_certificate_examples():
    f = fam.or_(3)
    assert M.certificate(f, (0, 1, 0)) == (1,)
    assert M.certificate_complexity(f, (0, 0, 0)) == 3
    assert M.certificate(TruthTable.constant(3, 1), 5) == ()
    assert M.certificate_complexity(fam.maj(3), (1, 1, 0)) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_lattice_certificates_match_search(rng, n):
    for _ in range(4):
        f = random_table(rng, n)
        lat = M.certificate_complexities(f)
        assert [M.certificate_complexity(f, i) for i in range(1 << n)] == lat.tolist()
        assert M.cmin(f, method="lattice") == M.cmin(f, method="search") == lat.min()
        assert M.certificate_complexity_max(f, "lattice") == M.certificate_complexity_max(f, "search")


def test_dt_matches_brute_force_exhaustive_n3():
    for index in range(256):
        f = TruthTable(3, np.array([(index >> i) & 1 for i in range(8)], dtype=np.uint8))
        assert M.dt(f) == brute_dt(f)


@pytest.mark.parametrize("n", [4, 5])
def test_dt_matches_brute_force_random(rng, n):
    for _ in range(15):
        f = random_table(rng, n)
        assert M.dt(f) == brute_dt(f)


def test_dt_batch_matches_single(rng):
    bits = rng.integers(0, 2, (20, 32), dtype=np.uint8)
    batch = M.dt_batch(bits, 5)
    assert batch.tolist() == [M.dt(TruthTable(5, row)) for row in bits]


def test_known_dt_values():
    assert M.dt(fam.xor(5)) == 5
    assert M.dt(fam.and_(4)) == 4
    assert M.dt(fam.ind(2)) == 3
    assert M.dt(TruthTable.constant(4, 0)) == 0


def test_mobius_examples():
    assert M.mobius(fam.xor(2)).coefficients == {frozenset({0}): 1, frozenset({1}): 1, frozenset({0, 1}): -2}
    assert M.mobius(fam.and_(3)).coefficients == {frozenset({0, 1, 2}): 1}
    assert M.degree(TruthTable.constant(3, 1)) == 0
    assert M.degree(fam.xor(6)) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_mobius_reconstructs(rng, n):
    f = random_table(rng, n)
    e = M.mobius(f)
    assert e.reconstruct().tolist() == f.bits.tolist()
    for i in rng.integers(0, 1 << n, 10):
        assert e.evaluate(int(i)) == f(int(i))


def test_dt_at_least_degree_exhaustive_n3():
    for index in range(256):
        f = TruthTable(3, np.array([(index >> i) & 1 for i in range(8)], dtype=np.uint8))
        assert M.dt(f) >= M.degree(f)


def test_symmetric_interval_and_cmin():
    assert M.symmetric_interval((0, 0, 1, 1)) == M.SymmetricInterval(0, 1)
    assert M.cmin_symmetric((0, 0, 1, 1)) == 2
    assert M.symmetric_interval((0, 1, 0)) == M.SymmetricInterval(0, 0)
    assert M.cmin_symmetric((1, 1, 1, 0)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_cmin_formula_exhaustive(n):
    for pred in product((0, 1), repeat=n + 1):
        assert M.cmin_symmetric(pred) == M.cmin(fam.symmetric(pred))


def test_graph_formulas():
    assert M.turan_bound(6, 3) == 9
    assert M.cmin_clique_formula(6, 3) == 3
    assert M.cmin_clique_formula(4, 3) == 2
    assert M.cmin_clique_formula(4, 3) == M.cmin(fam.clique(4, 3))
    assert M.cmin_conn_formula(4) == M.cmin(fam.conn(4)) == 3


def test_caps():
    big = TruthTable.constant(14, 0)
    with pytest.raises(CapExceededError):
        M.dt(big)
    assert M.dt(big, slow=True) == 0
    with pytest.raises(CapExceededError):
        M.certificate(TruthTable.constant(17, 0), 0)
