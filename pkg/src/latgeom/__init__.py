from .ideal_lattices import gram_of_ideal, gram_of_omega, minimal_gram_of_class, wr_real_criterion
from .minima import brute_force_minima
from .reduction import (
    apply_transform,
    compose,
    is_hexagonal,
    is_matrix_integral,
    is_wr,
    lattice_type,
    minimal_scale,
    minimal_vector_count,
    reduce_form,
    similarity_class,
    verify_angle_identity,
)

__all__ = [
    "apply_transform",
    "brute_force_minima",
    "compose",
    "gram_of_ideal",
    "gram_of_omega",
    "is_hexagonal",
    "is_matrix_integral",
    "is_wr",
    "lattice_type",
    "minimal_gram_of_class",
    "minimal_scale",
    "minimal_vector_count",
    "reduce_form",
    "similarity_class",
    "verify_angle_identity",
    "wr_real_criterion",
]
