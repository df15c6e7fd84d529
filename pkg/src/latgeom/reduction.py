"""
Gauss-Lagrange reduction of positive-definite binary quadratic forms and the
well-rounded predicates read off the reduced form.
"""

import logging
from fractions import Fraction
from math import gcd

from ..arith.integers import squarefree_part
from ..errors import NotWellRoundedError
from ..models.classes import PqClass
from ..models.forms import IDENTITY, QuadForm, ReductionResult, Transform

logger = logging.getLogger(__name__)

_SWAP: Transform = (0, -1, 1, 0)
_FLIP: Transform = (1, 0, 0, -1)


def compose(U: Transform, V: Transform) -> Transform:
    """Matrix product U·V"""
    u1, u2, u3, u4 = U
    v1, v2, v3, v4 = V
    return (u1 * v1 + u2 * v3, u1 * v2 + u2 * v4, u3 * v1 + u4 * v3, u3 * v2 + u4 * v4)


def apply_transform(F: QuadForm, U: Transform) -> QuadForm:
    """The form F(s1·x + s2·y, s3·x + s4·y), i.e. Gram matrix Uᵀ G U"""
    s1, s2, s3, s4 = U
    A, B, C = F.A, F.B, F.C
    return QuadForm(
        A * s1 * s1 + B * s1 * s3 + C * s3 * s3,
        2 * A * s1 * s2 + B * (s1 * s4 + s2 * s3) + 2 * C * s3 * s4,
        A * s2 * s2 + B * s2 * s4 + C * s4 * s4,
    )


def reduce_form(F: QuadForm) -> ReductionResult:
    """
    Reduce F to the unique form with 0 ≤ B ≤ A ≤ C in its class under
    GL2(Z). A is then the lattice minimum and C the second successive minimum.
    """
    A, B, C = F.A, F.B, F.C
    U = IDENTITY
    while True:
        # translate B into (−A, A]
        k = (A - B) // (2 * A)
        if k:
            C = A * k * k + B * k + C
            B = B + 2 * k * A
            U = compose(U, (1, k, 0, 1))
        if A > C:
            A, B, C = C, -B, A
            U = compose(U, _SWAP)
            continue
        break
    if B < 0:
        B = -B
        U = compose(U, _FLIP)
    return ReductionResult(form=QuadForm(A, B, C), transform=U)


def is_wr(F: QuadForm) -> bool:
    reduced = reduce_form(F).form
    return reduced.A == reduced.C


def is_hexagonal(F: QuadForm) -> bool:
    reduced = reduce_form(F).form
    return reduced.A == reduced.B == reduced.C


def minimal_vector_count(F: QuadForm) -> int:
    """Number of lattice vectors of minimal length: 6, 4 or 2"""
    reduced = reduce_form(F).form
    if reduced.A != reduced.C:
        return 2
    return 6 if reduced.B == reduced.A else 4


def similarity_class(F: QuadForm) -> PqClass:
    """
    Class token of a well-rounded form: cos θ = B/(2A) = p/q on the reduced
    form and q² − p² = r²·D with D squarefree.
    """
    reduced = reduce_form(F).form
    if reduced.A != reduced.C:
        raise NotWellRoundedError(f"form {F} reduces to {reduced}, which is not well-rounded")
    common = gcd(reduced.B, 2 * reduced.A)
    p, q = reduced.B // common, 2 * reduced.A // common
    D, r = squarefree_part(q * q - p * p)
    return PqClass(p=p, q=q, r=r, D=D)


def lattice_type(F: QuadForm) -> int:
    """Type D of a well-rounded form"""
    return similarity_class(F).D


def verify_angle_identity(F: QuadForm, c: PqClass) -> bool:
    """Check sin²θ = r²D/q² as (4A² − B²)·q² = 4A²·r²D on the reduced form"""
    reduced = reduce_form(F).form
    if reduced.A != reduced.C:
        return False
    A, B = reduced.A, reduced.B
    return (4 * A * A - B * B) * c.q * c.q == 4 * A * A * c.r * c.r * c.D


def is_matrix_integral(F: QuadForm) -> bool:
    """True when the Gram matrix [[A, B/2], [B/2, C]] has integer entries"""
    return F.B % 2 == 0


def minimal_scale(F: QuadForm) -> Fraction:
    """t with reduce_form(F) = t·(q, 2p, q) for the class (p, q, r, D) of F"""
    c = similarity_class(F)
    return Fraction(reduce_form(F).form.A, c.q)
