from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Factorization(BaseModel):
    """Prime factorization of a positive integer as increasing (prime, exponent) pairs"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    factors: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_product(self) -> "Factorization":
        product = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous or exponent < 1:
                raise ValueError(f"malformed factor ({prime}, {exponent}) of {self.n}")
            product *= prime ** exponent
            previous = prime
        if product != self.n:
            raise ValueError(f"factors multiply to {product}, not {self.n}")
        return self

    @property
    def omega(self) -> int:
        """Number of distinct prime factors"""
        return len(self.factors)

    @property
    def tau(self) -> int:
        """Number of positive divisors"""
        count = 1
        for _, exponent in self.factors:
            count *= exponent + 1
        return count

    @property
    def is_squarefree(self) -> bool:
        return all(exponent == 1 for _, exponent in self.factors)
