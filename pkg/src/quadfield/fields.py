import logging

from cachetools import LRUCache, cached

from ..arith.integers import is_squarefree
from ..config import FIELD_CACHE_SIZE
from ..errors import InvalidArgumentError, NotSquarefreeError
from ..models.fields import FieldDesc

logger = logging.getLogger(__name__)


@cached(LRUCache(maxsize=FIELD_CACHE_SIZE))
def make_field(m: int) -> FieldDesc:
    """Describe Q(√m) for squarefree m ∉ {0, 1}"""
    if m in (0, 1):
        raise InvalidArgumentError(f"m must not be 0 or 1 (got {m})")
    if not is_squarefree(abs(m)):
        raise NotSquarefreeError(m, name="m")

    if m % 4 == 1:
        trace, norm = 1, (1 - m) // 4
    else:
        trace, norm = 0, -m
    return FieldDesc(
        m=m,
        D=abs(m),
        kind="real" if m > 0 else "imaginary",
        delta_trace=trace,
        delta_norm=norm,
    )


def element_norm(field: FieldDesc, x: int, y: int) -> int:
    """N(x + yδ); negative values occur in real fields"""
    return field.element_norm(x, y)
