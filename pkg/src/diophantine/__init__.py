from .nearsquare import as_nu, is_nearsquare, nearsquare_mask, nearsquare_witness
from .solver import (
    BoundReport,
    DivisorPair,
    bound_report,
    count_functions,
    divisor_pairs,
    f2_divisor_count,
    solvable_mask,
    solve_pq,
)

__all__ = [
    "BoundReport",
    "DivisorPair",
    "as_nu",
    "bound_report",
    "count_functions",
    "divisor_pairs",
    "f2_divisor_count",
    "is_nearsquare",
    "nearsquare_mask",
    "nearsquare_witness",
    "solvable_mask",
    "solve_pq",
]
