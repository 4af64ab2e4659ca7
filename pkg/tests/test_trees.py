import numpy as np
import pytest

from instcomp import families as fam
from instcomp.algorithms import naive_full_tree
from instcomp.errors import ComputesCheckError, ParseError, TreeStructureError
from instcomp.trees import (
    DecisionTree,
    Leaf,
    Query,
    check_computes,
    computes,
    materialize,
    parse_tree,
    profile,
    serialize,
    tree_queries,
)

AND2 = DecisionTree(2, Query(0, Leaf(0), Query(1, Leaf(0), Leaf(1))), name="and2")


def test_run_and_profile():
    assert AND2.run((1, 1)) == (1, 2)
    assert AND2.run((0, 1)) == (0, 1)
    outputs, queries = profile(AND2)
    assert outputs.tolist() == [0, 0, 0, 1]
    assert queries.tolist() == [1, 2, 1, 2]
    assert tree_queries(AND2, "10") == 2
    assert AND2.depth() == 2


def test_computes_check():
    assert computes(AND2, fam.and_(2))
    assert not computes(AND2, fam.or_(2))
    assert check_computes(AND2, fam.and_(2)).tolist() == [1, 2, 1, 2]
    with pytest.raises(ComputesCheckError):
        check_computes(AND2, fam.or_(2))


def test_repeated_query_rejected():
    bad = DecisionTree(2, Query(0, Query(0, Leaf(0), Leaf(1)), Leaf(1)))
    with pytest.raises(TreeStructureError):
        profile(bad)
    with pytest.raises(TreeStructureError):
        profile(DecisionTree(2, Query(2, Leaf(0), Leaf(1))))


def test_serialize_round_trip():
    text = serialize(AND2)
    assert text == "(q 1 (leaf 0) (q 2 (leaf 0) (leaf 1)))"
    assert parse_tree(text, 2) == AND2


@pytest.mark.parametrize("text", ["(q 1 (leaf 0))", "(leaf 2)", "(q 3 (leaf 0) (leaf 1))", "(q 1 (leaf 0) (leaf 1)) x", ""])
def test_parse_errors(text):
    with pytest.raises((ParseError, TreeStructureError)):
        parse_tree(text, 2)


def test_policy_matches_materialized_tree(rng):
    f = fam.symmetric(rng.integers(0, 2, 6))
    policy = naive_full_tree(f)
    tree = materialize(policy)
    for a, b in zip(profile(policy), profile(tree)):
        assert np.array_equal(a, b)
    assert computes(policy, f)
    assert (profile(policy)[1] == 5).all()
