from fractions import Fraction
from math import gcd
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PqClass(BaseModel):
    """
    Similarity class of a well-rounded lattice in the plane.

    The lattice has minimal vectors at angle θ with cos θ = p/q, and
    p² + r²D = q². The square lattice is (p, q, r, D) = (0, 1, 1, 1).
    """
    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=0)
    q: int = Field(ge=1)
    r: int = Field(ge=1)
    D: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_class(self) -> "PqClass":
        # local import: arith depends on models
        from ..arith.integers import is_squarefree

        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")
        if 2 * self.p > self.q:
            raise ValueError(f"p/q = {self.p}/{self.q} exceeds 1/2")
        if not is_squarefree(self.D):
            raise ValueError(f"D must be squarefree (got {self.D})")
        if self.p * self.p + self.r * self.r * self.D != self.q * self.q:
            raise ValueError(f"{self.p}² + {self.r}²·{self.D} ≠ {self.q}²")
        return self

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.p, self.q)

    def key(self) -> Tuple[int, int, int, int]:
        return (self.D, self.p, self.q, self.r)


class CountTriple(BaseModel):
    """Counts of divisor-pair solutions of p² + r²D = q² for fixed (r, D)"""
    model_config = ConfigDict(frozen=True)

    D: int
    r: int
    f: int = Field(ge=0, description="coprime pairs with p/q ≤ 1/2")
    f1: int = Field(ge=0, description="coprime pairs")
    f2: int = Field(ge=0, description="pairs with p/q ≤ 1/2")

    @model_validator(mode="after")
    def _check_order(self) -> "CountTriple":
        if self.f > self.f1 or self.f > self.f2:
            raise ValueError(f"f={self.f} exceeds f1={self.f1} or f2={self.f2}")
        return self
