"""
Nearsquare integers.

D is ν-nearsquare when it has a divisor d with √(D/ν) ≤ d < √D. With ν = 3
this is the necessary (and, for odd D, sufficient) condition for p² + D = q²
to have a coprime solution with 0 < p/q ≤ 1/2.
"""

import logging
from fractions import Fraction
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from ..arith.integers import divisors, is_squarefree, isqrt
from ..config import DEFAULT_NU
from ..errors import InvalidArgumentError, NotSquarefreeError

logger = logging.getLogger(__name__)

Rational = Union[Fraction, int, str]


def as_nu(nu: Rational) -> Fraction:
    """Parse ν and check ν > 1"""
    try:
        value = Fraction(nu)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidArgumentError(f"ν must be a rational number (got {nu!r})") from e
    if value <= 1:
        raise InvalidArgumentError(f"ν must be > 1 (got {value})")
    return value


def nearsquare_witness(D: int, nu: Rational = DEFAULT_NU) -> Optional[int]:
    """
    Smallest divisor d of D with D ≤ ν·d² and d² < D, or None.

    The comparison is done as D·den ≤ num·d² on integers.
    """
    value = as_nu(nu)
    if D < 1:
        raise InvalidArgumentError(f"D must be ≥ 1 (got {D})")
    if not is_squarefree(D):
        raise NotSquarefreeError(D)

    for d in divisors(D):
        if d * d >= D:
            break
        if D * value.denominator <= value.numerator * d * d:
            return d
    return None


def is_nearsquare(D: int, nu: Rational = DEFAULT_NU) -> bool:
    return nearsquare_witness(D, nu) is not None


def nearsquare_mask(N: int, nu: Rational = DEFAULT_NU) -> npt.NDArray[np.bool_]:
    """
    Boolean table over 0..N: entry n is True iff n = d1·d2 with
    d1 < d2 ≤ ν·d1, i.e. n has a divisor in [√(n/ν), √n).

    Squarefreeness is not applied here; combine with a squarefree sieve.
    """
    value = as_nu(nu)
    if N < 1:
        raise InvalidArgumentError(f"mask bound must be ≥ 1 (got {N})")

    mask = np.zeros(N + 1, dtype=bool)
    num, den = value.numerator, value.denominator
    for d1 in range(1, isqrt(N) + 1):
        upper = min(num * d1 // den, N // d1)
        if upper > d1:
            mask[d1 * np.arange(d1 + 1, upper + 1)] = True
    mask.flags.writeable = False
    return mask
