"""Norm forms of ideal lattices and of the model lattices Ω_D(p, q)."""

import logging

from ..errors import FieldKindError, InvalidIdealError
from ..models.classes import PqClass
from ..models.fields import IdealBasis, admits_basis
from ..models.forms import CriterionVerdict, QuadForm

logger = logging.getLogger(__name__)


def gram_of_ideal(ideal: IdealBasis) -> QuadForm:
    """
    Norm form of the embedded ideal lattice in the basis {a, b + gδ}.

    Real fields use the Minkowski embedding (σ1, σ2), imaginary fields the
    complex embedding; both forms have integer coefficients.
    """
    field = ideal.field
    a, b, g, D = ideal.a, ideal.b, ideal.g, field.D
    if not admits_basis(field, a, b, g):
        raise InvalidIdealError(f"({a}, {b}, {g}) is not an ideal of {field}")

    if field.kind == "real":
        if field.residue_case:
            return QuadForm(2 * a * a, 2 * a * (2 * b + g), ((2 * b + g) ** 2 + g * g * D) // 2)
        return QuadForm(2 * a * a, 4 * a * b, 2 * (b * b + g * g * D))
    if field.residue_case:
        return QuadForm(a * a, a * (2 * b + g), ((2 * b + g) ** 2 + g * g * D) // 4)
    return QuadForm(a * a, 2 * a * b, b * b + g * g * D)


def gram_of_omega(c: PqClass) -> QuadForm:
    """Form of the basis (q, 0), (p, r√D)"""
    return QuadForm(c.q * c.q, 2 * c.p * c.q, c.q * c.q)


def minimal_gram_of_class(c: PqClass) -> QuadForm:
    return QuadForm(c.q, 2 * c.p, c.q)


def wr_real_criterion(ideal: IdealBasis) -> CriterionVerdict:
    """
    Sufficient test on a primitive ideal of a real field.

    ImpliesR1 when a | 2D: any well-rounded lattice of the ideal then has
    r = 1. MinkowskiSufficient when the basis is already Minkowski reduced
    enough that well-roundedness would force a | 2D.
    """
    field = ideal.field
    if field.kind != "real":
        raise FieldKindError(f"the criterion applies to real fields, not {field}")
    if ideal.g != 1:
        raise FieldKindError(f"the criterion needs a primitive ideal (got g={ideal.g})")

    a, b, D = ideal.a, ideal.b, field.D
    if (2 * D) % a == 0:
        return CriterionVerdict.IMPLIES_R1
    if field.residue_case:
        minkowski = min(4 * a * a, (2 * b + 1) ** 2 + D) >= 8 * a * (b + 1)
    else:
        minkowski = min(a * a, b * b + D) >= 2 * a * b
    return CriterionVerdict.MINKOWSKI_SUFFICIENT if minkowski else CriterionVerdict.INCONCLUSIVE
