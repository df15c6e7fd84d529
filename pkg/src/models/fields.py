"""Quadratic fields and ideal bases in canonical Hermite normal form."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

FieldKind = Literal["real", "imaginary"]


class FieldDesc(BaseModel):
    """
    The field Q(√m) for a squarefree m ∉ {0, 1}.

    The ring of integers is Z[δ] with δ = (1−√m)/2 when m ≡ 1 (mod 4) and
    δ = −√m otherwise, so that δ² = trace·δ − norm.
    """
    model_config = ConfigDict(frozen=True)

    m: int
    D: int = Field(ge=1)
    kind: FieldKind
    delta_trace: int
    delta_norm: int

    @model_validator(mode="after")
    def _check_consistency(self) -> "FieldDesc":
        if self.D != abs(self.m):
            raise ValueError(f"D={self.D} is not |m| for m={self.m}")
        expected_kind = "real" if self.m > 0 else "imaginary"
        if self.kind != expected_kind:
            raise ValueError(f"m={self.m} gives a {expected_kind} field, not {self.kind}")
        if self.m % 4 == 1:
            expected = (1, (1 - self.m) // 4)
        else:
            expected = (0, -self.m)
        if (self.delta_trace, self.delta_norm) != expected:
            raise ValueError(f"minimal polynomial of δ does not match m={self.m}")
        return self

    @property
    def residue_case(self) -> bool:
        """True when m ≡ 1 (mod 4)"""
        return self.delta_trace == 1

    def element_norm(self, x: int, y: int) -> int:
        """N(x + yδ)"""
        return x * x + self.delta_trace * x * y + self.delta_norm * y * y

    def __str__(self) -> str:
        return f"Q(√{self.m})"


class IdealBasis(BaseModel):
    """
    Nonzero ideal with Z-basis {a, b + gδ}.

    Canonical when g | a, g | b, 0 ≤ b < a and a·g divides N(b + gδ); the
    ideal norm is then a·g.
    """
    model_config = ConfigDict(frozen=True)

    field: FieldDesc
    a: int = Field(gt=0)
    b: int = Field(ge=0)
    g: int = Field(gt=0)

    @model_validator(mode="after")
    def _check_canonical(self) -> "IdealBasis":
        if not admits_basis(self.field, self.a, self.b, self.g):
            raise ValueError(
                f"(a={self.a}, b={self.b}, g={self.g}) is not an ideal of {self.field}"
            )
        return self

    @property
    def norm(self) -> int:
        return self.a * self.g

    @property
    def is_primitive(self) -> bool:
        return self.g == 1

    def label(self) -> str:
        second = f"{self.b}+{self.g}δ" if self.g != 1 else f"{self.b}+δ"
        return f"⟨{self.a}, {second}⟩"


def admits_basis(field: FieldDesc, a: int, b: int, g: int) -> bool:
    """Check the canonical-basis conditions without building a model"""
    if a <= 0 or g <= 0 or not 0 <= b < a:
        return False
    if a % g or b % g:
        return False
    return field.element_norm(b, g) % (a * g) == 0
