"""
Static configuration.

Nothing here is read from the environment: every run is reproducible from
its command line alone. Per-invocation options are validated by
``ScanOptions``; everything else is a module constant.
"""

from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field

PACKAGE_NAME = "wr-ideals"
PACKAGE_VERSION = "1.0.0"

# Nearsquare threshold used by the solvability gate (ν = 3 in the √(D/ν) convention)
DEFAULT_NU = Fraction(3)

# classify_wr_ideals searches a ≤ A_MAX_FACTOR · D for imaginary fields
A_MAX_FACTOR = 4

# The density argument is only claimed for N ≥ 289
DENSITY_PROOF_THRESHOLD = 289
DENSITY_BOUND_DISPLAY_DIGITS = 6

DEFAULT_PRINCIPAL_HEIGHT = 20
SCAN_CHUNK_SIZE = 2048

# cachetools sizes
FACTOR_CACHE_SIZE = 65536
FIELD_CACHE_SIZE = 1024
CLASS_NUMBER_CACHE_SIZE = 4096

# Reference table: D -> ((a, b) of both listed ideals, (p, q) of their class)
TABLE1: Tuple[Tuple[int, Tuple[Tuple[int, int], Tuple[int, int]], Tuple[int, int]], ...] = (
    (21, ((3, 1), (7, 3)), (2, 5)),
    (77, ((7, 3), (11, 5)), (2, 9)),
    (133, ((7, 3), (19, 9)), (6, 13)),
    (209, ((11, 5), (19, 9)), (4, 15)),
)

LOG_FORMAT = "%(message)s"


class ScanOptions(BaseModel):
    """Validated options for field scans"""
    model_config = ConfigDict(frozen=True)

    max_D: int = Field(ge=1)
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=SCAN_CHUNK_SIZE, ge=1)
