"""Records produced by field scans, classifications and the reference table."""

from fractions import Fraction
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .classes import PqClass
from .fields import IdealBasis


class SurveyRecord(BaseModel):
    """One squarefree D of a field scan"""
    model_config = ConfigDict(frozen=True)

    D: int = Field(ge=1)
    nearsquare3: bool
    witness: Optional[int] = None
    solvable: bool
    f: int = Field(ge=0)
    f1: int = Field(ge=0)
    f2: int = Field(ge=0)
    f2_divisors: int = Field(ge=0)
    omega: int = Field(ge=0)
    tau: int = Field(ge=1)
    f1_bound_ok: bool
    # the imaginary field is decided exactly; for the real field solvability is only sufficient
    real_claim: Literal["sufficient", "open"]

    @model_validator(mode="after")
    def _check_solvability(self) -> "SurveyRecord":
        # D = 1 is solvable through the square class and has no nearsquare divisor
        if self.D > 1 and self.solvable and not self.nearsquare3:
            raise ValueError(f"D={self.D} is solvable but not 3-nearsquare")
        if self.D % 2 == 1 and self.nearsquare3 and not self.solvable:
            raise ValueError(f"odd D={self.D} is 3-nearsquare but not solvable")
        return self


class ScanSummary(BaseModel):
    """Set sizes for one scan bound N"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    N: int = Field(ge=1)
    squarefree_count: int
    nearsquare_count: int
    solvable_count: int
    ratio_nearsquare: Fraction
    ratio_solvable: Fraction


class DensityReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    summary: ScanSummary
    squarefree_density: Fraction
    squarefree_density_limit: str
    bound: str
    meets_bound: bool
    below_proof_threshold: bool


class ClassNumberRecord(BaseModel):
    """Reduced primitive forms of the fundamental discriminant of Q(√−D)"""
    model_config = ConfigDict(frozen=True)

    D: int = Field(ge=1)
    delta: int = Field(lt=0)
    h: int = Field(ge=1)
    forms: Tuple[Tuple[int, int, int], ...]
    wr_classes: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_counts(self) -> "ClassNumberRecord":
        if len(self.forms) != self.h:
            raise ValueError(f"{len(self.forms)} forms listed for h={self.h}")
        if self.wr_classes > self.h:
            raise ValueError(f"{self.wr_classes} well-rounded classes exceed h={self.h}")
        return self


class ClassReport(BaseModel):
    """Well-rounded ideals of one field, grouped by similarity class"""
    model_config = ConfigDict(frozen=True)

    m: int
    D: int = Field(ge=1)
    a_max: int = Field(ge=1)
    classes: List[PqClass]
    representatives: List[IdealBasis]
    h: Optional[int] = None
    wr_class_count: int = Field(ge=0)
    expected: Optional[List[PqClass]] = None
    missing: List[PqClass] = []

    @model_validator(mode="after")
    def _check_count(self) -> "ClassReport":
        if self.wr_class_count != len(self.classes):
            raise ValueError(f"wr_class_count={self.wr_class_count} but {len(self.classes)} classes")
        return self

    @property
    def complete(self) -> Optional[bool]:
        """None when no expectation exists (real fields)"""
        if self.expected is None:
            return None
        return not self.missing


class PrincipalHit(BaseModel):
    """A well-rounded principal ideal and the first generator x + yδ found for it"""
    model_config = ConfigDict(frozen=True)

    x: int
    y: int
    ideal: IdealBasis
    cls: PqClass


class RealFieldRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    D: int
    d_mod_4: int
    solvable: bool
    wr_class_count: int
    first_wr_ideal: Optional[str] = None
    principal_wr: bool


class Table1Row(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    D: int
    ideal_1: str
    ideal_2: str
    ratio: Fraction
    r: int
