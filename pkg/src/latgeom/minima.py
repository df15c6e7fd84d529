import logging
from typing import List

from ..arith.integers import isqrt
from ..errors import InvalidArgumentError
from ..models.forms import MinimalVector, QuadForm

logger = logging.getLogger(__name__)


def brute_force_minima(F: QuadForm, bound: int) -> List[MinimalVector]:
    """
    Every nonzero (x, y) with F(x, y) ≤ bound, sorted by (value, x, y).

    F(x, y) ≤ t forces x² ≤ 4Ct/det and y² ≤ 4At/det with det = 4AC − B²,
    so the search box is exact.
    """
    if bound < 1:
        raise InvalidArgumentError(f"bound must be ≥ 1 (got {bound})")

    det = F.determinant
    x_max = isqrt(4 * F.C * bound // det)
    y_max = isqrt(4 * F.A * bound // det)
    found = []
    for x in range(-x_max, x_max + 1):
        for y in range(-y_max, y_max + 1):
            if x == 0 and y == 0:
                continue
            value = F.evaluate(x, y)
            if value <= bound:
                found.append(MinimalVector(x, y, value))
    found.sort(key=lambda v: (v.value, v.x, v.y))
    logger.debug(f"{F}: {len(found)} vectors of value ≤ {bound} in a {x_max}x{y_max} box")
    return found
