"""
Exact integer arithmetic: factorization, squarefreeness and divisors.

Everything here works on Python ints; no floating point is involved.
"""

import logging
import math
from typing import List, Tuple

from cachetools import LRUCache, cached

from ..config import FACTOR_CACHE_SIZE
from ..errors import InvalidArgumentError
from ..models.arithmetic import Factorization

logger = logging.getLogger(__name__)

# gaps between successive integers coprime to 30, starting at 7
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)


def isqrt(n: int) -> int:
    """Floor of the square root of n ≥ 0"""
    if n < 0:
        raise InvalidArgumentError(f"isqrt needs n ≥ 0 (got {n})")
    return math.isqrt(n)


@cached(LRUCache(maxsize=FACTOR_CACHE_SIZE))
def factorize(n: int) -> Factorization:
    """Trial division over a mod-30 wheel."""
    if n < 1:
        raise InvalidArgumentError(f"factorize needs n ≥ 1 (got {n})")

    factors: List[Tuple[int, int]] = []
    remaining = n
    for prime in (2, 3, 5):
        exponent = 0
        while remaining % prime == 0:
            remaining //= prime
            exponent += 1
        if exponent:
            factors.append((prime, exponent))

    candidate = 7
    step = 0
    while candidate * candidate <= remaining:
        exponent = 0
        while remaining % candidate == 0:
            remaining //= candidate
            exponent += 1
        if exponent:
            factors.append((candidate, exponent))
        candidate += _WHEEL_GAPS[step]
        step = (step + 1) % len(_WHEEL_GAPS)

    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(n=n, factors=tuple(factors))


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise InvalidArgumentError(f"squarefreeness is defined for n ≥ 1 (got {n})")
    return factorize(n).is_squarefree


def squarefree_part(n: int) -> Tuple[int, int]:
    """Return (D, r) with n = r²·D and D squarefree."""
    if n < 1:
        raise InvalidArgumentError(f"squarefree_part needs n ≥ 1 (got {n})")
    core = 1
    root = 1
    for prime, exponent in factorize(n).factors:
        if exponent % 2:
            core *= prime
        root *= prime ** (exponent // 2)
    return core, root


def divisors(n: int) -> List[int]:
    """All positive divisors of n in increasing order"""
    if n < 1:
        raise InvalidArgumentError(f"divisors needs n ≥ 1 (got {n})")
    result = [1]
    for prime, exponent in factorize(n).factors:
        result = [d * prime ** k for d in result for k in range(exponent + 1)]
    return sorted(result)


def omega(n: int) -> int:
    """Number of distinct primes dividing n"""
    return factorize(n).omega


def tau(n: int) -> int:
    """Number of positive divisors of n"""
    return factorize(n).tau
