"""Decision trees and query policies.

A query algorithm is anything with ``n`` and ``step(answers)``: given the
answers observed so far (variable -> bit, 0-indexed variables) it returns the
next variable to query or a :class:`Leaf`. Explicit trees and lazily defined
policies are measured by the same code paths.

Text format, variables 1-indexed (``x_v``)::

    (q <var> <subtree if 0> <subtree if 1>)
    (leaf <bit>)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping, Union

import numpy as np

from .boolfn import TruthTable, input_index
from .errors import ComputesCheckError, ParseError, TreeStructureError


@dataclass(frozen=True)
class Leaf:
    value: int


@dataclass(frozen=True)
class Query:
    var: int
    zero: "Node"
    one: "Node"


Node = Union[Leaf, Query]


class QueryAlgorithm:
    n: int
    name: str = "algorithm"

    def step(self, answers: Mapping[int, int]) -> int | Leaf:
        raise NotImplementedError

    def run(self, x) -> tuple[int, int]:
        """(output, number of queries) on input ``x``."""
        idx = input_index(x, self.n)
        answers: dict[int, int] = {}
        while True:
            nxt = self.step(answers)
            if isinstance(nxt, Leaf):
                return nxt.value, len(answers)
            _check_var(nxt, self.n, answers)
            answers[nxt] = (idx >> nxt) & 1


def _check_var(v, n: int, answers) -> None:
    if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
        raise TreeStructureError(f"queried variable {v!r} out of range for n={n}")
    if v in answers:
        raise TreeStructureError(f"variable x_{v + 1} queried twice on one path")


class DecisionTree(QueryAlgorithm):
    """An explicit tree. Subtrees may be shared (the nodes are immutable)."""

    def __init__(self, n: int, root: Node, name: str = "tree"):
        self.n = n
        self.root = root
        self.name = name

    def step(self, answers: Mapping[int, int]) -> int | Leaf:
        node = self.root
        seen = 0
        while isinstance(node, Query):
            if node.var not in answers:
                return node.var
            node = node.one if answers[node.var] else node.zero
            seen += 1
        if seen != len(answers):
            raise TreeStructureError("answers do not follow a path of this tree")
        return node

    def run(self, x) -> tuple[int, int]:
        idx = input_index(x, self.n)
        node, depth, used = self.root, 0, set()
        while isinstance(node, Query):
            _check_var(node.var, self.n, used)
            used.add(node.var)
            node = node.one if (idx >> node.var) & 1 else node.zero
            depth += 1
        return node.value, depth

    def depth(self) -> int:
        def rec(node):
            if isinstance(node, Leaf):
                return 0
            return 1 + max(rec(node.zero), rec(node.one))

        return rec(self.root)

    def __eq__(self, other):
        return isinstance(other, DecisionTree) and self.n == other.n and self.root == other.root

    def __repr__(self):
        text = serialize(self)
        if len(text) > 60:
            text = text[:57] + "..."
        return f"DecisionTree(n={self.n}, {text})"


class Policy(QueryAlgorithm):
    """A tree given implicitly by a function of the answers seen so far."""

    def __init__(self, n: int, rule: Callable[[Mapping[int, int]], int | Leaf], name: str = "policy"):
        self.n = n
        self.rule = rule
        self.name = name

    def step(self, answers: Mapping[int, int]) -> int | Leaf:
        return self.rule(answers)


def profile(alg: QueryAlgorithm) -> tuple[np.ndarray, np.ndarray]:
    """Output and query count of ``alg`` on every input, in table-index order.

    Walks the tree once, splitting the set of inputs reaching each node.
    Raises TreeStructureError on a repeated or out-of-range query.
    """
    n = alg.n
    outputs = np.full(1 << n, -1, dtype=np.int64)
    queries = np.zeros(1 << n, dtype=np.int64)

    def split(idx, v):
        bit = (idx >> v) & 1
        return idx[bit == 0], idx[bit == 1]

    if isinstance(alg, DecisionTree):
        def rec_node(node, idx, used):
            if idx.size == 0:
                return
            if isinstance(node, Leaf):
                outputs[idx] = node.value
                queries[idx] = len(used)
                return
            _check_var(node.var, n, used)
            i0, i1 = split(idx, node.var)
            used.add(node.var)
            rec_node(node.zero, i0, used)
            rec_node(node.one, i1, used)
            used.discard(node.var)

        rec_node(alg.root, np.arange(1 << n), set())
    else:
        def rec_policy(answers, idx):
            if idx.size == 0:
                return
            nxt = alg.step(answers)
            if isinstance(nxt, Leaf):
                outputs[idx] = nxt.value
                queries[idx] = len(answers)
                return
            _check_var(nxt, n, answers)
            for b, part in zip((0, 1), split(idx, nxt)):
                answers[nxt] = b
                rec_policy(answers, part)
            del answers[nxt]

        rec_policy({}, np.arange(1 << n))
    return outputs, queries


def tree_queries(alg: QueryAlgorithm, x) -> int:
    return alg.run(x)[1]


def computes(alg: QueryAlgorithm, f: TruthTable) -> bool:
    if alg.n != f.n:
        return False
    outputs, _ = profile(alg)
    return bool(np.array_equal(outputs, f.bits.astype(np.int64)))


def check_computes(alg: QueryAlgorithm, f: TruthTable) -> np.ndarray:
    """Query counts of ``alg`` on all inputs, after checking that it computes f."""
    if alg.n != f.n:
        raise ComputesCheckError(f"{alg.name} is over {alg.n} variables, function has {f.n}")
    outputs, queries = profile(alg)
    bad = np.nonzero(outputs != f.bits.astype(np.int64))[0]
    if bad.size:
        raise ComputesCheckError(
            f"{alg.name} outputs {outputs[bad[0]]} on input index {bad[0]}, f gives {f.bits[bad[0]]}"
        )
    return queries


def materialize(alg: QueryAlgorithm) -> DecisionTree:
    """Expand a policy into an explicit tree (exponential in the worst case)."""
    if isinstance(alg, DecisionTree):
        return alg

    def rec(answers):
        nxt = alg.step(answers)
        if isinstance(nxt, Leaf):
            return nxt
        _check_var(nxt, alg.n, answers)
        answers[nxt] = 0
        zero = rec(answers)
        answers[nxt] = 1
        one = rec(answers)
        del answers[nxt]
        return Query(int(nxt), zero, one)

    return DecisionTree(alg.n, rec({}), name=alg.name)


# -- text format ------------------------------------------------------------

def serialize(alg: QueryAlgorithm) -> str:
    tree = materialize(alg)
    parts: list[str] = []

    def rec(node):
        if isinstance(node, Leaf):
            parts.append(f"(leaf {node.value})")
        else:
            parts.append(f"(q {node.var + 1} ")
            rec(node.zero)
            parts.append(" ")
            rec(node.one)
            parts.append(")")

    rec(tree.root)
    return "".join(parts)


_TOKEN = re.compile(r"\(|\)|[A-Za-z]+|-?\d+")


def parse_tree(text: str, n: int, name: str = "tree") -> DecisionTree:
    stripped = re.sub(r"\s+", " ", text).strip()
    tokens = _TOKEN.findall(stripped)
    if "".join(tokens) != stripped.replace(" ", ""):
        raise ParseError("unexpected characters in tree text")
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected {tok!r}, got {got!r}")
        pos += 1

    def integer():
        nonlocal pos
        if pos >= len(tokens) or not tokens[pos].lstrip("-").isdigit():
            raise ParseError("expected an integer")
        pos += 1
        return int(tokens[pos - 1])

    def node():
        nonlocal pos
        expect("(")
        if pos >= len(tokens):
            raise ParseError("truncated tree")
        kind = tokens[pos]
        pos += 1
        if kind == "leaf":
            value = integer()
            if value not in (0, 1):
                raise ParseError(f"leaf value {value} is not 0/1")
            expect(")")
            return Leaf(value)
        if kind == "q":
            var = integer()
            if not 1 <= var <= n:
                raise ParseError(f"variable {var} out of range 1..{n}")
            zero = node()
            one = node()
            expect(")")
            return Query(var - 1, zero, one)
        raise ParseError(f"unknown node kind {kind!r}")

    root = node()
    if pos != len(tokens):
        raise ParseError("trailing tokens after tree")
    tree = DecisionTree(n, root, name=name)
    profile(tree)  # structural validation
    return tree
