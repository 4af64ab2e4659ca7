from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from instcomp import families as fam
from instcomp import measures as M
from instcomp.boolfn import TruthTable
from instcomp.errors import CapExceededError
from instcomp.instc import (
    UNBOUNDED,
    candidate_ratios,
    enumerate_trees,
    feasible,
    instc_at,
    instc_exact,
    instc_oracle,
    instc_wrt,
    ratio,
    symmetric_instc_formula,
)
from instcomp.trees import DecisionTree, computes

from conftest import random_table


def literal_instc(f: TruthTable):
    """Minimum of instc_wrt over every tree computing f, listed one by one."""
    best = None
    for root in enumerate_trees(f.n):
        tree = DecisionTree(f.n, root)
        if computes(tree, f):
            value = instc_wrt(f, tree)
            if best is None or value < best:
                best = value
    return best


def test_ratio_conventions():
    assert ratio(0, 0) == 0
    assert ratio(3, 0) is UNBOUNDED
    assert UNBOUNDED > Fraction(10**9)
    assert ratio(4, 6) == Fraction(2, 3)


def test_enumerate_trees_counts():
    # T(0) = 2, T(1) = 2 + 1*2*2 = 6, T(2) = 2 + 2 * 6^2 = 74
    assert sum(1 for _ in enumerate_trees(1)) == 6
    assert sum(1 for _ in enumerate_trees(2)) == 74


def test_candidates():
    f = fam.maj(3)
    assert candidate_ratios(f) == sorted({Fraction(d, 2) for d in range(4)})
    with pytest.raises(ValueError):
        candidate_ratios(TruthTable.constant(2, 0))


def test_majority_feasibility():
    f = fam.maj(3)
    assert feasible(f, Fraction(3, 2))
    assert not feasible(f, Fraction(4, 3))


def test_frozen_oracle_values():
    assert instc_oracle(fam.omb(3)) == Fraction(3, 2)
    assert instc_oracle(fam.maj(3)) == Fraction(3, 2)
    assert instc_oracle(fam.xor(3)) == 1
    assert instc_oracle(fam.and_(3)) == 3


def test_constant_function():
    res = instc_exact(TruthTable.constant(3, 1))
    assert res.value == 0
    assert computes(res.tree, TruthTable.constant(3, 1))


@pytest.mark.parametrize("n", [1, 2])
def test_solver_matches_literal_enumeration(n):
    for index in range(1 << (1 << n)):
        f = TruthTable(n, np.array([(index >> i) & 1 for i in range(1 << n)], dtype=np.uint8))
        assert instc_exact(f).value == literal_instc(f) == instc_oracle(f)


def test_oracle_matches_literal_enumeration_sample_n3(rng):
    for _ in range(3):
        f = random_table(rng, 3)
        assert instc_oracle(f) == literal_instc(f)


@pytest.mark.parametrize("n", [3, 4])
def test_witness_attains_value(rng, n):
    for _ in range(20):
        f = random_table(rng, n)
        res = instc_exact(f)
        assert computes(res.tree, f)
        assert instc_wrt(f, res.tree) == res.value
        assert res.value <= Fraction(M.dt(f), M.cmin(f))


def test_feasibility_is_monotone(rng):
    f = random_table(rng, 5)
    value = instc_exact(f).value
    for r in candidate_ratios(f):
        assert feasible(f, r) == (r >= value)


def test_instc_at_and_wrt():
    f = fam.and_(3)
    res = instc_exact(f)
    assert instc_at(f, (1, 1, 1), res.tree) == 1
    assert res.value == 3


@pytest.mark.parametrize("n", range(2, 6))
def test_symmetric_formula(n):
    for pred in product((0, 1), repeat=n + 1):
        assert instc_exact(fam.symmetric(pred)).value == symmetric_instc_formula(pred)


def test_caps():
    with pytest.raises(CapExceededError):
        instc_exact(fam.xor(14))
    with pytest.raises(CapExceededError):
        instc_oracle(fam.xor(5))
