"""Non-narrow-sense codes C(q, n, delta, b) whose consecutive exponents b, ..., b+delta-2
all lead cosets of full size m, so that dim = n - m(delta-1) and d_B = delta."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotEligible, UnsupportedRange
from .intmath import Digits, ilog, qadic_expand
from .params import BchParams


@dataclass(frozen=True)
class Eligibility:
    b: int
    j_b: int
    r_b: int
    digits: Digits
    head: int  # low block of lam*b
    tail: int  # shifted high block it must exceed
    delta_max: int | None  # None when head <= tail
    bose_delta_max: int | None  # same with ceil(head/lam); d_B = delta is only certain up to here


def b_range(p: BchParams) -> range:
    return range(p.scaled(p.m - p.h) + 1, p.scaled(p.top + 1))


def eligibility(p: BchParams, b: int) -> Eligibility:
    if p.m < 4:
        raise UnsupportedRange(f"needs m >= 4, got m={p.m}")
    rng = b_range(p)
    if b not in rng:
        raise UnsupportedRange(f"b={b} outside [{rng.start}, {rng.stop - 1}]")
    q, m, h, lam = p.q, p.m, p.h, p.lam
    lam_b = lam * b
    top = ilog(lam_b, q)
    j = top - h
    d = qadic_expand(lam_b, q, top + 1)
    r = next(i for i in range(m - 2 * h - j, j + 1) if d.digit(h + i) > 0)
    head = d.window(0, h - j - 1)
    tail = d.window(h - r, h + j, shift=h - r)
    delta_max = bose_max = None
    if head > tail:
        delta_max = p.scaled(h - j) - head // lam + 1
        bose_max = p.scaled(h - j) - -(-head // lam) + 1
    return Eligibility(b, j, r, d, head, tail, delta_max, bose_max)


def nonnarrow_eligible(p: BchParams, b: int) -> int | None:
    """Largest delta covered for this b, or None when the digit condition fails.

    The value can be below 2, in which case no delta is covered.
    """
    return eligibility(p, b).delta_max


def _check(p: BchParams, delta: int, b: int, bose: bool = False) -> None:
    e = eligibility(p, b)
    if e.delta_max is None:
        raise NotEligible(f"b={b} does not satisfy the digit condition for q={p.q}, m={p.m}, lambda={p.lam}")
    dmax = e.bose_delta_max if bose else e.delta_max
    if not 2 <= delta <= dmax:
        raise UnsupportedRange(f"delta={delta} outside [2, {dmax}] for b={b}")


def nonnarrow_dimension(p: BchParams, delta: int, b: int) -> int:
    _check(p, delta, b)
    return p.n - p.m * (delta - 1)


def nonnarrow_bose(p: BchParams, delta: int, b: int) -> int:
    """delta itself, for delta up to the ceil-based bound.

    At the floor-based bound the next exponent b+delta-1 can already lie in
    the defining set when lam does not divide the low block, e.g. q=4, m=4,
    lam=3, b=6, delta=6 where 11 is in the coset of 6 modulo 85.
    """
    _check(p, delta, b, bose=True)
    return delta
