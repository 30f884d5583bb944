"""Exact integer helpers: q-adic digits, lexicographic order, N(a), ilog."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadRange, LengthMismatch, ValueOutOfRange


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Digits:
    """Big-endian base-``base`` digit string ``(d_{len-1}, ..., d_1, d_0)``."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise BadRange(f"base must be >= 2, got {self.base}")
        if not self.digits:
            raise BadRange("digit sequence must be non-empty")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueOutOfRange(f"digit {d} not in [0, {self.base - 1}]")

    def __len__(self) -> int:
        return len(self.digits)

    def digit(self, pos: int) -> int:
        """Coefficient of ``base**pos``; positions above the top read as 0."""
        if pos < 0:
            raise IndexError(f"negative digit position {pos}")
        if pos >= len(self.digits):
            return 0
        return self.digits[-1 - pos]

    def window(self, lo: int, hi: int, shift: int = 0) -> int:
        """``sum(d_l * base**(l - shift) for l in [lo, hi])``.

        Empty when ``lo > hi``. ``shift`` may not exceed ``lo`` so the result
        stays integral.
        """
        if lo > hi:
            return 0
        if shift > lo:
            raise BadRange(f"shift {shift} would give negative exponents from {lo}")
        q = self.base
        total = 0
        for pos in range(hi, lo - 1, -1):
            total = total * q + self.digit(pos)
        return total * q ** (lo - shift)

    @property
    def value(self) -> int:
        return qadic_value(self)


def qadic_expand(a: int, q: int, length: int) -> Digits:
    if q < 2:
        raise BadRange(f"q must be >= 2, got {q}")
    if length < 1:
        raise BadRange(f"length must be positive, got {length}")
    if a < 0 or a >= q**length:
        raise ValueOutOfRange(f"{a} is not in [0, {q}^{length} - 1]")
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        a, out[pos] = divmod(a, q)
    return Digits(q, tuple(out))


def qadic_value(d: Digits) -> int:
    total = 0
    for x in d.digits:
        total = total * d.base + x
    return total


def lex_compare(u: Digits, v: Digits) -> Ordering:
    if u.base != v.base or len(u) != len(v):
        raise LengthMismatch(
            f"cannot compare base-{u.base} length-{len(u)} with base-{v.base} length-{len(v)}"
        )
    for x, y in zip(u.digits, v.digits):
        if x != y:
            return Ordering.LT if x < y else Ordering.GT
    return Ordering.EQ


def count_nondiv(a: int, q: int) -> int:
    """N(a): how many integers in [1, a-1] are not multiples of q."""
    if a < 1:
        raise BadRange(f"a must be >= 1, got {a}")
    if q < 2:
        raise BadRange(f"q must be >= 2, got {q}")
    return (a - 1) - (a - 1) // q


def ilog(a: int, q: int) -> int:
    """Largest e with q**e <= a."""
    if a < 1:
        raise BadRange(f"a must be >= 1, got {a}")
    if q < 2:
        raise BadRange(f"q must be >= 2, got {q}")
    e, p = 0, q
    while p <= a:
        p *= q
        e += 1
    return e


def floor_scaled(t: int, q: int, e: int) -> int:
    """Exact ``floor(t * q**e)`` for any integer exponent ``e``."""
    if e >= 0:
        return t * q**e
    return t // q ** (-e)


def exact(x: Fraction | int) -> int:
    """Convert a closed-form value that must be integral; raise otherwise."""
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"closed form produced non-integer {x}")
    return x.numerator


def prime_power_base(q: int) -> int | None:
    """Return p if q == p**e for a prime p and e >= 1, else None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
        p += 1
    return q


def divisors(x: int) -> list[int]:
    return [d for d in range(1, x + 1) if x % d == 0]
