"""Hermite normal form of rank-2 integer modules given by two generators."""

from typing import Tuple

import numpy as np
import numpy.typing as npt

from ..errors import InvalidArgumentError


def exgcd(a: int, b: int) -> npt.NDArray[np.object_]:
    """
    Unimodular 2x2 object matrix E with E @ [a, b] = [gcd(a, b), 0].

    The gcd is returned nonnegative.
    """
    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    # rows carry [value, coefficient of a, coefficient of b]
    M = np.array([[abs(a), a_sign, 0], [abs(b), 0, b_sign]], dtype=object)
    while M[1, 0] != 0:
        quotient = M[0, 0] // M[1, 0]
        M[0] -= quotient * M[1]
        M = M[::-1].copy()
    return M[:, 1:]


def column_hnf(v1: Tuple[int, int], v2: Tuple[int, int]) -> Tuple[int, int, int]:
    """
    Upper-triangular basis {(a, 0), (b, g)} of the lattice spanned by the
    columns v1, v2, with a, g > 0 and 0 ≤ b < a.
    """
    M = np.array([[v1[0], v2[0]], [v1[1], v2[1]]], dtype=object)
    if M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] == 0:
        raise InvalidArgumentError(f"generators {v1} and {v2} do not span a rank-2 lattice")

    # column operations zeroing the second row: M @ Eᵀ has second row [g, 0]
    reduced = M.dot(exgcd(M[1, 0], M[1, 1]).T)
    g = int(reduced[1, 0])
    a = abs(int(reduced[0, 1]))
    b = int(reduced[0, 0]) % a
    return a, b, g
