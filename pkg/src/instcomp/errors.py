"""Exception types raised across the package."""


class InstCompError(Exception):
    """Base class for all package errors."""


class InputShapeError(InstCompError, ValueError):
    """An input string or table has the wrong length."""


class FamilyParameterError(InstCompError, ValueError):
    """Invalid parameters for a function family."""


class CapExceededError(InstCompError, ValueError):
    """The requested computation exceeds the configured variable cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class TreeStructureError(InstCompError, ValueError):
    """A decision tree is malformed (bad variable, repeated query on a path)."""


class ComputesCheckError(InstCompError, ValueError):
    """A decision tree does not compute the function it is measured against."""


class ParseError(InstCompError, ValueError):
    """Malformed truth-table or tree text."""
