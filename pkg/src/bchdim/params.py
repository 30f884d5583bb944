from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadLambda, BadRange, NotPrimePower
from .intmath import prime_power_base


@dataclass(frozen=True)
class BchParams:
    """A code family C(q, (q^m-1)/lam, delta, b) with the length fixed.

    ``h`` is floor(m/2); ``top`` is floor((2m-1)/3), the exponent that bounds
    every closed form in this package.
    """

    q: int
    m: int
    lam: int = 1
    n: int = field(init=False)
    h: int = field(init=False)

    def __post_init__(self):
        if prime_power_base(self.q) is None:
            raise NotPrimePower(f"q={self.q} is not a prime power")
        if self.m < 2:
            raise BadRange(f"m must be >= 2, got {self.m}")
        if self.lam < 1 or (self.q - 1) % self.lam:
            raise BadLambda(f"lambda={self.lam} does not divide q-1={self.q - 1}")
        object.__setattr__(self, "n", (self.q**self.m - 1) // self.lam)
        object.__setattr__(self, "h", self.m // 2)

    @property
    def top(self) -> int:
        return (2 * self.m - 1) // 3

    @property
    def full_modulus(self) -> int:
        """lam * n == q^m - 1."""
        return self.q**self.m - 1

    @property
    def even(self) -> bool:
        return self.m % 2 == 0

    def scaled(self, e: int) -> int:
        """(q^e - 1) / lam, exact because lam | q - 1."""
        return (self.q**e - 1) // self.lam

    @property
    def dim_delta_max(self) -> int:
        """Largest designed distance covered by the dimension formula."""
        return self.scaled(self.top + 1) + 1

    @property
    def bose_delta_max(self) -> int:
        """Largest designed distance covered by the Bose-distance formulas."""
        return self.scaled(self.top + 1)

    def as_dict(self) -> dict:
        return {"q": self.q, "m": self.m, "lambda": self.lam, "n": self.n}
