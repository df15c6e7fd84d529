"""
Solutions of p² + r²D = q² in the well-rounded range 0 < p/q ≤ 1/2.

Every solution comes from a factorization r²D = d1·d2 with d1 < d2 of the
same parity, through q = (d1 + d2)/2 and p = (d2 − d1)/2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, List, Tuple

import numpy as np
import numpy.typing as npt

from ..arith.integers import divisors, factorize, is_squarefree, isqrt
from ..errors import InvalidArgumentError, NotSquarefreeError
from ..models.classes import CountTriple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivisorPair:
    d1: int
    d2: int

    @property
    def p(self) -> int:
        return (self.d2 - self.d1) // 2

    @property
    def q(self) -> int:
        return (self.d1 + self.d2) // 2

    @property
    def coprime(self) -> bool:
        return gcd(self.p, self.q) == 1

    @property
    def in_range(self) -> bool:
        return 2 * self.p <= self.q


@dataclass(frozen=True)
class BoundReport:
    """Counts for r = 1 against the 2^(ω(D)−1) bound on coprime pairs"""
    D: int
    f: int
    f1: int
    omega: int
    tau: int
    f1_bound_ok: bool

    @property
    def f1_bound(self) -> Fraction:
        """2^(ω(D)−1); 1/2 for D = 1"""
        return Fraction(2 ** self.omega, 2)

    @property
    def ratio(self) -> Fraction:
        """f(1) / 2^ω(D)"""
        return Fraction(self.f, 2 ** self.omega)


def _check_arguments(D: int, r: int) -> None:
    if D < 1:
        raise InvalidArgumentError(f"D must be ≥ 1 (got {D})")
    if not is_squarefree(D):
        raise NotSquarefreeError(D)
    if r < 1:
        raise InvalidArgumentError(f"r must be ≥ 1 (got {r})")


def divisor_pairs(n: int) -> Iterator[DivisorPair]:
    """Factorizations n = d1·d2 with d1 < d2 and d1 ≡ d2 (mod 2), by increasing d1"""
    for d1 in divisors(n):
        d2 = n // d1
        if d1 >= d2:
            break
        if (d1 - d2) % 2 == 0:
            yield DivisorPair(d1, d2)


def solve_pq(D: int, r: int = 1) -> List[Tuple[int, int]]:
    """
    All coprime (p, q) with p² + r²D = q² and 0 < p/q ≤ 1/2, sorted by (p, q).

    Raises NotSquarefreeError when D is not squarefree.
    """
    _check_arguments(D, r)
    solutions = sorted(
        (pair.p, pair.q)
        for pair in divisor_pairs(r * r * D)
        if pair.coprime and pair.in_range
    )
    logger.debug(f"solve_pq(D={D}, r={r}) -> {len(solutions)} solutions")
    return solutions


def count_functions(D: int, r: int = 1) -> CountTriple:
    """f counts coprime in-range pairs, f1 coprime pairs, f2 in-range pairs."""
    _check_arguments(D, r)
    f = f1 = f2 = 0
    for pair in divisor_pairs(r * r * D):
        f1 += pair.coprime
        f2 += pair.in_range
        f += pair.coprime and pair.in_range
    return CountTriple(D=D, r=r, f=f, f1=f1, f2=f2)


def f2_divisor_count(D: int, r: int = 1) -> int:
    """
    Number of divisors b of n = r²D with n < b² ≤ 3n.

    Agrees with the f2 of count_functions when n is odd; for even n it also
    counts factorizations of mixed parity.
    """
    _check_arguments(D, r)
    n = r * r * D
    return sum(1 for b in divisors(n) if n < b * b <= 3 * n)


def bound_report(D: int) -> BoundReport:
    """f(1) and f1(1) for odd D, with the exact check 2·f1 ≤ 2^ω(D)"""
    if D % 2 == 0:
        raise InvalidArgumentError(f"bound_report needs odd D (got {D})")
    triple = count_functions(D, 1)
    factorization = factorize(D)
    w = factorization.omega
    bound_ok = 2 * triple.f1 <= 2 ** w
    if not bound_ok:
        logger.warning(f"f1(1) = {triple.f1} exceeds 2^(ω−1) for D={D}")
    return BoundReport(
        D=D,
        f=triple.f,
        f1=triple.f1,
        omega=w,
        tau=factorization.tau,
        f1_bound_ok=bound_ok,
    )


def solvable_mask(N: int) -> npt.NDArray[np.bool_]:
    """
    Boolean table over 0..N marking n = d1·d2 with d1 < d2 ≤ 3·d1, both odd.

    For squarefree n these are exactly the n for which p² + n = q² has a
    coprime solution with p/q ≤ 1/2 (2p ≤ q is d2 ≤ 3·d1; same parity
    forces both odd). Entries for non-squarefree n carry no meaning.
    """
    if N < 1:
        raise InvalidArgumentError(f"mask bound must be ≥ 1 (got {N})")
    mask = np.zeros(N + 1, dtype=bool)
    for d1 in range(1, isqrt(N) + 1, 2):
        upper = min(3 * d1, N // d1)
        if upper > d1:
            mask[d1 * np.arange(d1 + 2, upper + 1, 2)] = True
    mask.flags.writeable = False
    return mask
