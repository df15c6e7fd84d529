from .integers import (
    divisors,
    factorize,
    is_squarefree,
    isqrt,
    omega,
    squarefree_part,
    tau,
)
from .sieve import squarefree_sieve, squarefree_values

__all__ = [
    "divisors",
    "factorize",
    "is_squarefree",
    "isqrt",
    "omega",
    "squarefree_part",
    "squarefree_sieve",
    "squarefree_values",
    "tau",
]
