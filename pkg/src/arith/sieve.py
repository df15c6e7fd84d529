import logging

import numpy as np
import numpy.typing as npt

from ..errors import InvalidArgumentError
from .integers import isqrt

logger = logging.getLogger(__name__)


def squarefree_sieve(N: int) -> npt.NDArray[np.bool_]:
    """
    Indicator of squarefree integers on 0..N.

    Entry n is True iff n ≥ 1 is squarefree; entry 0 is False. The returned
    array is read-only.
    """
    if N < 1:
        raise InvalidArgumentError(f"sieve bound must be ≥ 1 (got {N})")

    table = np.ones(N + 1, dtype=bool)
    table[0] = False
    # k² for non-squarefree k is already covered by a smaller square
    for k in range(2, isqrt(N) + 1):
        square = k * k
        if table[k]:
            table[square::square] = False
    table.flags.writeable = False
    logger.debug(f"Sieved squarefree integers up to {N}: {int(table.sum())} found")
    return table


def squarefree_values(table: npt.NDArray[np.bool_], lower: int = 1) -> npt.NDArray[np.intp]:
    """Squarefree integers ≥ lower recorded in a sieve table"""
    values = np.flatnonzero(table)
    return values[values >= lower]
