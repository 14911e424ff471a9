"""
Exception hierarchy for the lattice app.

Commands translate these into exit codes; tasks log them and return error payloads.
"""
from typing import Optional


class LatticeError(Exception):
    """Base class for every error raised by the lattice package."""


class DimensionError(LatticeError, ValueError):
    """Shapes or indices do not fit the operation."""


class SingularMatrixError(LatticeError):
    pass


class DegeneratePolytopeError(LatticeError, ValueError):
    """Generators do not span a full-dimensional polytope."""


class InvariantViolation(LatticeError):
    """An identity that must hold exactly did not: this is always a bug."""


class ExpressionError(LatticeError, ValueError):
    """Malformed construction expression or DSL text."""


class NotApplicableError(LatticeError, ValueError):
    """Input lies outside the hypothesis of a checker."""


class InadmissiblePairError(LatticeError, ValueError):
    def __init__(self, a1: int, a2: int, inequality: Optional[str] = None) -> None:
        self.a1 = a1
        self.a2 = a2
        self.inequality = inequality
        detail = f"{inequality} violated" if inequality else "not admissible"
        super().__init__(f"(a_1, a_2) = ({a1}, {a2}): {detail}")
