"""Exact query-complexity measures of small Boolean functions.

The central quantity is the instance complexity InstC(f): the least r such
that some decision tree for f reads at most r * C(f, x) bits on every input x.
"""

from .boolfn import Subcube, TruthTable, evaluate, is_constant_on, parse_table, restrict
from .errors import (
    CapExceededError,
    ComputesCheckError,
    FamilyParameterError,
    InputShapeError,
    InstCompError,
    ParseError,
    TreeStructureError,
)
from .families import FamilySpec, make_family
from .instc import UNBOUNDED, InstCResult, feasible, instc_exact, instc_oracle, instc_wrt
from .measures import certificate_complexity, certificate_complexity_max, cmin, degree, dt, mobius

__all__ = [
    "CapExceededError", "ComputesCheckError", "FamilyParameterError", "FamilySpec", "InputShapeError",
    "InstCResult", "InstCompError", "ParseError", "Subcube", "TreeStructureError", "TruthTable", "UNBOUNDED",
    "certificate_complexity", "certificate_complexity_max", "cmin", "degree", "dt", "evaluate", "feasible",
    "instc_exact", "instc_oracle", "instc_wrt", "is_constant_on", "make_family", "mobius", "parse_table",
    "restrict",
]
