"""Explicit Boolean functions as truth tables, subcubes and restrictions.

Index convention: entry ``i`` of a table is f(x) for the input whose variable
x_j (1-indexed) equals bit j-1 of ``i``. So x_1 is the least significant bit.
Internally variables are 0-indexed (``v = j - 1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import CapExceededError, InputShapeError, ParseError

CORE_CAP = 20


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceededError(what, n, cap)


def input_index(x: str | Sequence[int] | int, n: int) -> int:
    """Table index of an input given as a bit string/sequence (x_1 first) or an int."""
    if isinstance(x, (int, np.integer)):
        if not 0 <= x < (1 << n):
            raise InputShapeError(f"input index {x} out of range for n={n}")
        return int(x)
    bits = [int(c) for c in x] if isinstance(x, str) else [int(b) for b in x]
    if len(bits) != n:
        raise InputShapeError(f"input has {len(bits)} bits, function has n={n}")
    idx = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise InputShapeError(f"input bit {b!r} is not 0/1")
        idx |= b << j
    return idx


def input_bits(index: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`input_index`: the bits (x_1, ..., x_n)."""
    return tuple((index >> j) & 1 for j in range(n))


@dataclass(frozen=True, eq=False)
class TruthTable:
    n: int
    bits: np.ndarray

    def __post_init__(self):
        if self.n < 0:
            raise InputShapeError("n must be non-negative")
        _check_cap(self.n, CORE_CAP, "truth table")
        bits = np.asarray(self.bits, dtype=np.uint8).reshape(-1)
        if bits.shape[0] != 1 << self.n:
            raise InputShapeError(f"table has {bits.shape[0]} entries, expected 2^{self.n}")
        if bits.size and bits.max() > 1:
            raise InputShapeError("table entries must be 0/1")
        bits = bits.copy()
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_function(cls, n: int, fn) -> "TruthTable":
        """Tabulate ``fn(bits)`` where ``bits`` is the tuple (x_1, ..., x_n)."""
        return cls(n, np.array([int(bool(fn(input_bits(i, n)))) for i in range(1 << n)]))

    @classmethod
    def constant(cls, n: int, value: int) -> "TruthTable":
        return cls(n, np.full(1 << n, value, dtype=np.uint8))

    def __call__(self, x) -> int:
        return int(self.bits[input_index(x, self.n)])

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self):
        s = self.to_string()
        if len(s) > 40:
            s = s[:37] + "..."
        return f"TruthTable(n={self.n}, bits={s})"

    def cube(self) -> np.ndarray:
        """The table as an n-dimensional (2, ..., 2) array; variable v is axis -1-v."""
        return self.bits.reshape((2,) * self.n)

    def is_constant(self) -> bool:
        return bool(self.bits.min() == self.bits.max())

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def negate(self) -> "TruthTable":
        return TruthTable(self.n, 1 - self.bits)


def evaluate(f: TruthTable, x) -> int:
    return f(x)


@dataclass(frozen=True)
class Subcube:
    """A partial assignment. ``fixed`` is a sorted tuple of (variable, bit) pairs."""

    n: int
    fixed: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fixed = tuple(sorted((int(v), int(b)) for v, b in self.fixed))
        seen = set()
        for v, b in fixed:
            if not 0 <= v < self.n:
                raise InputShapeError(f"fixed variable {v} out of range for n={self.n}")
            if b not in (0, 1):
                raise InputShapeError(f"fixed value {b!r} is not 0/1")
            if v in seen:
                raise InputShapeError(f"variable {v} fixed twice")
            seen.add(v)
        object.__setattr__(self, "fixed", fixed)

    @classmethod
    def from_mapping(cls, n: int, assignment: Mapping[int, int]) -> "Subcube":
        return cls(n, tuple(assignment.items()))

    @classmethod
    def from_key(cls, n: int, key: int) -> "Subcube":
        fixed = []
        for v in range(n):
            key, d = divmod(key, 3)
            if d != 2:
                fixed.append((v, d))
        return cls(n, tuple(fixed))

    @classmethod
    def from_point(cls, n: int, x, support: Iterable[int] | None = None) -> "Subcube":
        """The subcube fixing ``x`` on ``support`` (all variables by default)."""
        bits = input_bits(input_index(x, n), n)
        vars_ = range(n) if support is None else support
        return cls(n, tuple((v, bits[v]) for v in vars_))

    @property
    def assignment(self) -> dict[int, int]:
        return dict(self.fixed)

    @property
    def free(self) -> tuple[int, ...]:
        fixed = self.assignment
        return tuple(v for v in range(self.n) if v not in fixed)

    @property
    def codim(self) -> int:
        return len(self.fixed)

    def key(self) -> int:
        """Base-3 code: digit v is the bit fixed at v, or 2 when v is free."""
        digits = [2] * self.n
        for v, b in self.fixed:
            digits[v] = b
        return sum(d * 3**v for v, d in enumerate(digits))

    def ternary(self) -> str:
        """Human-readable form, x_1 first, ``*`` for free variables."""
        fixed = self.assignment
        return "".join(str(fixed[v]) if v in fixed else "*" for v in range(self.n))

    def fix(self, v: int, b: int) -> "Subcube":
        return Subcube(self.n, self.fixed + ((v, b),))

    def union(self, other: "Subcube") -> "Subcube":
        return Subcube(self.n, self.fixed + other.fixed)

    def contains(self, x) -> bool:
        idx = input_index(x, self.n)
        return all((idx >> v) & 1 == b for v, b in self.fixed)

    def block_index(self) -> tuple:
        """Numpy index into :meth:`TruthTable.cube` selecting this subcube."""
        fixed = self.assignment
        return tuple(fixed.get(v, slice(None)) for v in reversed(range(self.n)))


def _check_subcube(f: TruthTable, rho: Subcube) -> None:
    if rho.n != f.n:
        raise InputShapeError(f"subcube over {rho.n} variables, function has n={f.n}")


def restrict(f: TruthTable, rho: Subcube) -> TruthTable:
    """Subfunction on the free variables of ``rho``, kept in ascending order."""
    _check_subcube(f, rho)
    block = f.cube()[rho.block_index()]
    return TruthTable(f.n - rho.codim, np.ascontiguousarray(block).reshape(-1))


def is_constant_on(f: TruthTable, rho: Subcube, method: str = "scan") -> int | None:
    """Value of f if it is constant on ``rho``, otherwise None.

    ``method="scan"`` reads the 2^(n-|fixed|) points of the subcube directly;
    ``method="lattice"`` looks the answer up in the whole-lattice constancy table.
    """
    _check_subcube(f, rho)
    if method == "scan":
        block = f.cube()[rho.block_index()]
        lo, hi = int(block.min()), int(block.max())
        return lo if lo == hi else None
    if method == "lattice":
        from .lattice import constancy_table

        value = int(constancy_table(f).reshape(-1)[rho.key()])
        return None if value < 0 else value
    raise ValueError(f"unknown method {method!r}")


def hamming_weights(n: int) -> np.ndarray:
    """Hamming weight of every table index, as an int array of length 2^n."""
    w = np.zeros(1 << n, dtype=np.int64)
    for j in range(n):
        w += (np.arange(1 << n) >> j) & 1
    return w


def is_symmetric(f: TruthTable) -> tuple[int, ...] | None:
    """The weight predicate (D_f(0), ..., D_f(n)) if f depends only on weight."""
    w = hamming_weights(f.n)
    predicate = []
    for k in range(f.n + 1):
        vals = f.bits[w == k]
        if vals.min() != vals.max():
            return None
        predicate.append(int(vals[0]))
    return tuple(predicate)


# text format: "n=<k>" then 2^k characters of 0/1, whitespace tolerant
_TABLE_RE = re.compile(r"\s*n\s*=\s*(\d+)\s+([01\s]*)", re.ASCII)


def parse_table(text: str) -> TruthTable:
    m = _TABLE_RE.fullmatch(text)
    if m is None:
        raise ParseError("expected 'n=<k>' followed by a whitespace-separated 0/1 string")
    n = int(m.group(1))
    _check_cap(n, CORE_CAP, "truth table")
    body = "".join(m.group(2).split())
    if len(body) != 1 << n:
        raise ParseError(f"expected {1 << n} table characters, got {len(body)}")
    return TruthTable(n, np.frombuffer(body.encode(), dtype=np.uint8) - ord("0"))


def format_table(f: TruthTable) -> str:
    return f"n={f.n}\n{f.to_string()}\n"


def read_table(path) -> TruthTable:
    with open(path) as fh:
        return parse_table(fh.read())


def write_table(f: TruthTable, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_table(f))
