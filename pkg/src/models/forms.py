"""Binary quadratic forms F(x, y) = Ax² + Bxy + Cy² and their reductions."""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..errors import NotPositiveDefiniteError

# 2x2 integer matrix (s1, s2, s3, s4) = [[s1, s2], [s3, s4]]
Transform = Tuple[int, int, int, int]
IDENTITY: Transform = (1, 0, 0, 1)


class CriterionVerdict(Enum):
    """Outcome of the sufficient well-roundedness test for real-field ideals"""
    IMPLIES_R1 = "ImpliesR1"
    MINKOWSKI_SUFFICIENT = "MinkowskiSufficient"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class QuadForm:
    """Positive-definite binary quadratic form"""
    A: int
    B: int
    C: int

    def __post_init__(self) -> None:
        if self.A <= 0 or self.C <= 0 or 4 * self.A * self.C - self.B * self.B <= 0:
            raise NotPositiveDefiniteError(
                f"form ({self.A}, {self.B}, {self.C}) is not positive definite"
            )

    @property
    def determinant(self) -> int:
        """Determinant of the Gram matrix [[2A, B], [B, 2C]]"""
        return 4 * self.A * self.C - self.B * self.B

    def evaluate(self, x: int, y: int) -> int:
        return self.A * x * x + self.B * x * y + self.C * y * y

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.A, self.B, self.C)

    def __str__(self) -> str:
        return f"({self.A}, {self.B}, {self.C})"


@dataclass(frozen=True)
class ReductionResult:
    """Reduced form together with the unimodular matrix U that produced it"""
    form: QuadForm
    transform: Transform


@dataclass(frozen=True)
class MinimalVector:
    x: int
    y: int
    value: int
