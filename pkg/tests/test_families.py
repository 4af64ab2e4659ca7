import itertools

import pytest

from instcomp import families as fam
from instcomp.boolfn import hamming_weights
from instcomp.errors import FamilyParameterError
from instcomp.families import FamilySpec, make_family


def test_basic_families():
    assert fam.xor(2).to_string() == "0110"
    assert fam.and_(2).to_string() == "0001"
    assert fam.or_(2).to_string() == "0111"
    assert fam.maj(3).to_string() == "00010111"


def test_majority_tie_outputs_one():
    w = hamming_weights(4)
    assert all(fam.maj(4).bits[w == 2] == 1)


def test_indexing_reads_addressed_target():
    m = 2
    f = fam.ind(m)
    assert f.n == 6
    for address in range(4):
        for target in itertools.product((0, 1), repeat=4):
            x = [address & 1, (address >> 1) & 1, *target]
            assert f(tuple(x)) == target[address]


def test_gt_and_omb_definitions():
    n = 3
    f = fam.gt(n)
    for xv in range(8):
        for yv in range(8):
            assert f(xv | (yv << n)) == int(xv > yv)
    g = fam.omb(4)
    for i in range(16):
        assert g(i) == (i.bit_length() % 2 if i else 0)


def test_graph_families():
    assert fam.edges(3) == [(1, 2), (1, 3), (2, 3)]
    assert fam.clique(4, 2) == fam.or_(6)
    assert fam.clique(5, 2) == fam.or_(10)
    # triangle on 3 vertices is AND of the three edges
    assert fam.clique(3, 3) == fam.and_(3)
    c = fam.conn(3)
    # connected iff at least two of three edges present
    assert c == fam.maj(3)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("clique", vertices=4, k=5),
        FamilySpec("clique", vertices=4, k=1),
        FamilySpec("conn", vertices=1),
        FamilySpec("xor", n=0),
        FamilySpec("maj", n=3, k=1),
        FamilySpec("gt"),
        FamilySpec("symmetric", n=3, predicate=(0, 1)),
        FamilySpec("nope", n=2),
    ],
)
def test_bad_parameters(spec):
    with pytest.raises(FamilyParameterError):
        make_family(spec)


def test_make_family_dispatch_and_labels():
    spec = FamilySpec("symmetric", n=3, predicate=(0, 0, 1, 1))
    assert make_family(spec) == fam.maj(3)
    assert spec.label() == "symmetric(n=3,predicate=0011)"
    assert make_family(FamilySpec("ind", m=1)) == fam.ind(1)
