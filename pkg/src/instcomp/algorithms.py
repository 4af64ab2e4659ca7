"""Explicit query algorithms for the studied families, and the GT adversary."""

from __future__ import annotations

from dataclasses import dataclass, field

from .boolfn import TruthTable, input_index
from .errors import CapExceededError, FamilyParameterError, TreeStructureError
from .trees import DecisionTree, Leaf, Policy, Query, QueryAlgorithm

NAIVE_CAP = 13
IND_TREE_CAP = 3


def gt_tree(n: int) -> DecisionTree:
    """Compare the most significant pair (x_n, y_n) first, recurse on a tie.

    Variables: x_i is index i-1, y_i is index n+i-1. On the bottom pair,
    x_1 = 0 already settles the answer (0), so T_1 may stop after one query.
    """
    if n < 1:
        raise FamilyParameterError(f"gt_tree: need n >= 1, got {n}")
    x = lambda i: i - 1  # noqa: E731
    y = lambda i: n + i - 1  # noqa: E731
    sub: Leaf | Query = Query(x(1), Leaf(0), Query(y(1), Leaf(1), Leaf(0)))
    for i in range(2, n + 1):
        sub = Query(
            x(i),
            Query(y(i), sub, Leaf(0)),
            Query(y(i), Leaf(1), sub),
        )
    return DecisionTree(2 * n, sub, name=f"gt_tree({n})")


def omb_tree(n: int) -> DecisionTree:
    """Scan from x_n downwards and output the parity of the first 1 found."""
    if n < 1 or n % 2 == 0:
        raise FamilyParameterError(f"omb_tree is defined for odd n >= 1, got {n}")
    sub: Leaf | Query = Query(0, Leaf(0), Leaf(1))
    for top in range(3, n + 1, 2):
        # x_top = 1 -> odd -> 1; x_{top-1} = 1 -> even -> 0
        sub = Query(top - 1, Query(top - 2, sub, Leaf(0)), Leaf(1))
    return DecisionTree(n, sub, name=f"omb_tree({n})")


def naive_full_tree(f: TruthTable) -> Policy:
    """Query x_1, ..., x_n in order, then output f(x)."""
    if f.n > NAIVE_CAP:
        raise CapExceededError("naive_full_tree", f.n, NAIVE_CAP)
    n = f.n

    def rule(answers):
        if len(answers) < n:
            return len(answers)
        return Leaf(f(tuple(answers[v] for v in range(n))))

    return Policy(n, rule, name="naive")


def ind_tree(m: int) -> DecisionTree:
    """Read the address x_1..x_m, then the single addressed target."""
    if m < 1:
        raise FamilyParameterError(f"ind_tree: need m >= 1, got {m}")
    if m > IND_TREE_CAP:
        raise CapExceededError("ind_tree", m, IND_TREE_CAP)

    def rec(v: int, address: int):
        if v == m:
            target = m + address  # y_{bin(x)} with bin(x) = 1 + address
            return Query(target, Leaf(0), Leaf(1))
        return Query(v, rec(v + 1, address), rec(v + 1, address | (1 << v)))

    return DecisionTree(m + (1 << m), rec(0, 0), name=f"ind_tree({m})")


# -- adversary --------------------------------------------------------------

@dataclass
class AdversaryState:
    """Answers given so far in a GT_n game; x_i pairs with y_i."""

    n: int
    answered: dict[int, int] = field(default_factory=dict)

    def partner(self, v: int) -> int:
        return v + self.n if v < self.n else v - self.n


class GTAdversary:
    """First look at a pair: x_i gets 1, y_i gets 0. Second look: copy the partner."""

    def __init__(self, n: int):
        if n < 1:
            raise FamilyParameterError(f"gt adversary: need n >= 1, got {n}")
        self.n = n

    def answer(self, state: AdversaryState, v: int) -> int:
        p = state.partner(v)
        if p in state.answered:
            return state.answered[p]
        return 1 if v < self.n else 0


def gt_adversary(n: int) -> GTAdversary:
    return GTAdversary(n)


@dataclass
class AdversaryRun:
    depth: int
    output: int
    transcript: list[tuple[int, int]]
    completions: tuple[tuple[int, ...], tuple[int, ...]] | None

    def transcript_json(self) -> list[dict]:
        return [{"var": v + 1, "answer": b} for v, b in self.transcript]


def _completions(state: AdversaryState) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two inputs consistent with the answers, one with GT = 0 and one with GT = 1."""
    n, ans = state.n, state.answered
    zero = [0] * (2 * n)
    for i in range(n):
        xv, yv = i, i + n
        if xv in ans:
            val = ans[xv]
        elif yv in ans:
            val = ans[yv]
        else:
            val = 0
        zero[xv] = zero[yv] = val
    one = list(zero)
    open_pairs = [i for i in range(n) if not (i in ans and i + n in ans)]
    top = max(open_pairs)
    # an answered x is 1 and an answered y is 0 on a half-open pair
    one[top], one[top + n] = 1, 0
    return tuple(zero), tuple(one)


def run_adversary(tree: QueryAlgorithm, adversary: GTAdversary) -> AdversaryRun:
    """Walk ``tree`` against the adversary until it reaches a leaf.

    If the leaf is reached before all 2n variables are read, also return two
    completions of the transcript on which GT_n differs; one of them refutes
    the tree's output.
    """
    n = adversary.n
    if tree.n != 2 * n:
        raise TreeStructureError(f"tree has {tree.n} variables, GT_{n} has {2 * n}")
    state = AdversaryState(n)
    transcript = []
    while True:
        nxt = tree.step(state.answered)
        if isinstance(nxt, Leaf):
            break
        if not 0 <= nxt < 2 * n or nxt in state.answered:
            raise TreeStructureError(f"invalid query x_{nxt + 1} on the adversary path")
        bit = adversary.answer(state, nxt)
        state.answered[nxt] = bit
        transcript.append((nxt, bit))
    depth = len(transcript)
    completions = _completions(state) if depth < 2 * n else None
    return AdversaryRun(depth, nxt.value, transcript, completions)


def refutes(run: AdversaryRun, f: TruthTable) -> bool:
    """Whether the run's completions disagree on f (so the tree cannot compute f)."""
    if run.completions is None:
        return False
    a, b = (input_index(c, f.n) for c in run.completions)
    return int(f.bits[a]) != int(f.bits[b])
