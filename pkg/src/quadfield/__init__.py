from .fields import element_norm, make_field
from .ideals import (
    construct_wr_ideal,
    enumerate_ideals,
    ideal_norm,
    iter_ideals,
    literal_branch_candidate,
    primitive_part,
    principal_hnf,
    principal_ideal_basis,
    validate_ideal,
)

__all__ = [
    "construct_wr_ideal",
    "element_norm",
    "enumerate_ideals",
    "ideal_norm",
    "iter_ideals",
    "literal_branch_candidate",
    "make_field",
    "primitive_part",
    "principal_hnf",
    "principal_ideal_basis",
    "validate_ideal",
]
