from fractions import Fraction

import pytest

from instcomp import families as fam
from instcomp.algorithms import (
    gt_adversary,
    gt_tree,
    ind_tree,
    naive_full_tree,
    omb_tree,
    refutes,
    run_adversary,
)
from instcomp.errors import CapExceededError, FamilyParameterError
from instcomp.instc import enumerate_trees, instc_wrt
from instcomp.trees import DecisionTree, Leaf, computes, profile


@pytest.mark.parametrize("n", range(1, 6))
def test_gt_tree_computes_and_stays_within_two(n):
    f = fam.gt(n)
    tree = gt_tree(n)
    assert computes(tree, f)
    assert instc_wrt(f, tree) <= 2


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_omb_tree(n):
    f = fam.omb(n)
    tree = omb_tree(n)
    assert computes(tree, f)
    assert instc_wrt(f, tree) == Fraction(2 * n, n + 1)


def test_omb_tree_rejects_even():
    with pytest.raises(FamilyParameterError):
        omb_tree(4)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_ind_tree(m):
    tree = ind_tree(m)
    assert computes(tree, fam.ind(m))
    assert (profile(tree)[1] == m + 1).all()
    with pytest.raises(CapExceededError):
        ind_tree(4)


def test_naive_tree_reads_everything():
    f = fam.maj(4)
    assert computes(naive_full_tree(f), f)
    assert instc_wrt(f, naive_full_tree(f)) == Fraction(4, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_adversary_forces_full_depth(n):
    run = run_adversary(gt_tree(n), gt_adversary(n))
    assert run.depth == 2 * n
    assert run.completions is None


def test_adversary_refutes_every_shallow_tree():
    f = fam.gt(1)
    shallow = [root for root in enumerate_trees(2) if DecisionTree(2, root).depth() <= 1]
    assert len(shallow) == 10
    for root in shallow:
        run = run_adversary(DecisionTree(2, root), gt_adversary(1))
        assert run.depth <= 1
        assert refutes(run, f)
        zero, one = run.completions
        assert f(zero) == 0 and f(one) == 1


@pytest.mark.parametrize("value", [0, 1])
def test_adversary_refutes_constant_guess(value):
    n = 3
    run = run_adversary(DecisionTree(2 * n, Leaf(value)), gt_adversary(n))
    assert run.depth == 0 and refutes(run, fam.gt(n))


def test_transcript_json_is_one_based():
    run = run_adversary(gt_tree(1), gt_adversary(1))
    assert run.transcript_json() == [{"var": 1, "answer": 1}, {"var": 2, "answer": 1}]
