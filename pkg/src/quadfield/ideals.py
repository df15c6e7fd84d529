"""
Ideals of quadratic rings of integers in canonical basis form.

An ideal is stored as (a, b, g) with Z-basis {a, b + gδ}. Enumeration,
the well-rounded constructions and principal-ideal canonicalization all
return validated IdealBasis values.
"""

import logging
from typing import Dict, Iterator, List, Literal, Tuple

import numpy as np

from ..arith.integers import divisors, is_squarefree
from ..errors import InvalidArgumentError, InvalidIdealError, NotSquarefreeError
from ..models.fields import FieldDesc, IdealBasis, admits_basis
from .fields import make_field
from .hnf import column_hnf

logger = logging.getLogger(__name__)

Sign = Literal["real", "imaginary"]

# above this, b² + t·b + n may overflow int64 in the vectorised root search
_VECTOR_LIMIT = 2 ** 62


def validate_ideal(field: FieldDesc, a: int, b: int, g: int) -> bool:
    """True iff (a, b, g) is the canonical basis of an ideal of the field's ring"""
    return admits_basis(field, a, b, g)


def ideal_norm(ideal: IdealBasis) -> int:
    return ideal.a * ideal.g


def primitive_part(ideal: IdealBasis) -> IdealBasis:
    """I / g, the primitive ideal (a/g, b/g, 1)"""
    if ideal.g == 1:
        return ideal
    return IdealBasis(field=ideal.field, a=ideal.a // ideal.g, b=ideal.b // ideal.g, g=1)


def _norm_roots(field: FieldDesc, a: int) -> List[int]:
    """All 0 ≤ b < a with a | N(b + δ)"""
    if a * a + abs(field.delta_norm) < _VECTOR_LIMIT:
        b = np.arange(a, dtype=np.int64)
        values = b * b + field.delta_trace * b + field.delta_norm
        return [int(root) for root in np.flatnonzero(values % a == 0)]
    return [b for b in range(a) if field.element_norm(b, 1) % a == 0]


def iter_ideals(
    field: FieldDesc, a_max: int, primitive_only: bool = False
) -> Iterator[IdealBasis]:
    """Canonical ideals with a ≤ a_max, in (a, g, b) order."""
    if a_max < 1:
        raise InvalidArgumentError(f"a_max must be ≥ 1 (got {a_max})")

    roots: Dict[int, List[int]] = {}
    for a in range(1, a_max + 1):
        roots[a] = _norm_roots(field, a)
        scales = [1] if primitive_only else divisors(a)
        for g in scales:
            # (a, b, g) is valid iff (a/g, b/g, 1) is
            for root in roots[a // g]:
                yield IdealBasis(field=field, a=a, b=g * root, g=g)


def enumerate_ideals(
    field: FieldDesc, a_max: int, primitive_only: bool = False
) -> List[IdealBasis]:
    """
    All valid (a, b, g) with a ≤ a_max, ordered by (a, g, b). Non-primitive
    ideals (g > 1) are included unless primitive_only is set.
    """
    ideals = list(iter_ideals(field, a_max, primitive_only))
    logger.debug(f"{field}: {len(ideals)} ideals with a ≤ {a_max}")
    return ideals


def _check_solution(D: int, p: int, q: int) -> None:
    if D < 1 or D % 2 == 0:
        raise InvalidArgumentError(f"the construction needs odd D (got {D})")
    if not is_squarefree(D):
        raise NotSquarefreeError(D)
    if p < 1 or q < 1 or p * p + D != q * q:
        raise InvalidIdealError(f"(p, q) = ({p}, {q}) does not solve p² + {D} = q²")
    if 2 * p > q:
        raise InvalidIdealError(f"p/q = {p}/{q} exceeds 1/2, so the lattice is not well-rounded")


def _field_for(D: int, sign: Sign) -> FieldDesc:
    if sign not in ("real", "imaginary"):
        raise InvalidArgumentError(f"sign must be 'real' or 'imaginary' (got {sign!r})")
    return make_field(D if sign == "real" else -D)


def _branch(s: int, m: int) -> Tuple[int, int]:
    if m % 4 == 1:
        return s, (s - 1) // 2
    return 2 * s, s


def construct_wr_ideal(
    D: int, p: int, q: int, sign: Sign, companion: bool = False
) -> IdealBasis:
    """
    A primitive ideal whose lattice is well-rounded of class (p, q, 1, D).

    With s = p + q (or s = q − p for the companion ideal), the basis is
    (s, (s−1)/2) when the field's m ≡ 1 (mod 4) and (2s, s) otherwise.
    """
    _check_solution(D, p, q)
    field = _field_for(D, sign)
    s = q - p if companion else p + q
    a, b = _branch(s, field.m)
    if not admits_basis(field, a, b, 1):
        raise InvalidIdealError(f"construction gave invalid ({a}, {b}, 1) in {field}")
    return IdealBasis(field=field, a=a, b=b, g=1)


def literal_branch_candidate(D: int, p: int, q: int, sign: Sign) -> Tuple[int, int]:
    """
    The (a, b) obtained by keying the branch on D mod 4 for both fields.

    Returned unvalidated; for the imaginary field with D ≡ 1 (mod 4) it is
    not an ideal basis.
    """
    _check_solution(D, p, q)
    _field_for(D, sign)
    return _branch(p + q, D)


def principal_ideal_basis(field: FieldDesc, x: int, y: int) -> IdealBasis:
    """Canonical basis of (x + yδ)·O_K."""
    if x == 0 and y == 0:
        raise InvalidArgumentError("the generator must be nonzero")
    a, b, g = principal_hnf(field, x, y)
    return IdealBasis(field=field, a=a, b=b, g=g)


def principal_hnf(field: FieldDesc, x: int, y: int) -> Tuple[int, int, int]:
    """Raw (a, b, g) of (x + yδ)·O_K without building a model"""
    # α and δα in the {1, δ} basis, using δ² = tδ − n
    alpha = (x, y)
    delta_alpha = (-field.delta_norm * y, x + field.delta_trace * y)
    return column_hnf(alpha, delta_alpha)
