"""Closed-form Bose distance of narrow-sense BCH codes of length (q^m - 1)/lam."""

from __future__ import annotations

from dataclasses import dataclass

from .dimension import special_delta
from .errors import QDividesDelta, UnsupportedRange
from .intmath import Digits, ilog, qadic_expand
from .params import BchParams


@dataclass(frozen=True)
class BoseProfile:
    delta: int
    lam_d: int
    j_delta: int
    digits: Digits
    r_delta: int
    delta_hat: int
    low: int  # low block of lam*delta
    high: int  # the shifted high block it is compared with


def _check_range(p: BchParams, delta: int) -> None:
    if p.m < 4:
        raise UnsupportedRange(f"the Bose-distance formulas need m >= 4, got m={p.m}")
    if not 2 <= delta <= p.bose_delta_max:
        raise UnsupportedRange(
            f"delta={delta} outside the proven range [2, {p.bose_delta_max}] "
            f"for q={p.q}, m={p.m}, lambda={p.lam}"
        )


def bose_profile(p: BchParams, delta: int) -> BoseProfile:
    _check_range(p, delta)
    if delta % p.q == 0:
        raise QDividesDelta(f"q={p.q} divides delta={delta}")
    q, m, h = p.q, p.m, p.h
    lam_d = p.lam * delta
    if lam_d < q ** (m - h):
        raise UnsupportedRange(f"lambda*delta={lam_d} is below q^(m-h)={q ** (m - h)}")
    top = ilog(lam_d, q)
    j = top - h
    d = qadic_expand(lam_d, q, top + 1)
    lo_r = -j + 1 if m % 2 else -j
    r = next(i for i in range(lo_r, j + 1) if d.digit(h + i) > 0)
    shift = h - r + 1 if m % 2 else h - r
    high = d.window(shift, h + j, shift=shift)
    low = d.window(0, h - j) if m % 2 else d.window(0, h - j - 1)
    delta_hat = d.window(h + r, h + j) + high
    return BoseProfile(delta, lam_d, j, d, r, delta_hat, low, high)


def _tie_step(prof: BoseProfile, pivot: int, lam: int, q: int) -> int:
    """1 or 2: the integer equality pivot + lam - q == delta_hat mod lam, unreduced."""
    return 2 if pivot + lam - q == prof.delta_hat % lam else 1


def bose_distance(p: BchParams, delta: int) -> int:
    _check_range(p, delta)
    q, m, h, lam = p.q, p.m, p.h, p.lam
    if delta % q == 0:
        delta += 1
        if delta > p.bose_delta_max:
            raise UnsupportedRange(f"delta={delta} is past the proven range after skipping a multiple of q")
    if delta <= p.scaled(m - h):
        return delta
    prof = bose_profile(p, delta)
    d, r = prof.digits, prof.r_delta
    if m % 2:
        if prof.low > prof.high:
            return delta
        return prof.delta_hat // lam + _tie_step(prof, d.digit(h - r + 1), lam, q)
    if r != 0:
        if prof.low > prof.high:
            return delta
        return prof.delta_hat // lam + _tie_step(prof, d.digit(h - r), lam, q)
    if prof.low >= prof.high:
        return delta
    if prof.delta_hat % lam == 0:
        return prof.delta_hat // lam
    return prof.delta_hat // lam + _tie_step(prof, d.digit(h), lam, q)


def bose_special_ab(p: BchParams, k: int, a: int, b: int) -> int:
    """Bose distance when lam*delta = a q^(h+k) + b."""
    delta = special_delta(p, k, a, b)
    _check_range(p, delta)
    q, h, lam = p.q, p.h, p.lam
    if p.m % 2:
        if b > a * q ** (2 * k - 1):
            return delta
        return (a * q ** (h + k) + a * q ** (2 * k - 1)) // lam + 1
    # the tie test reads digit h-k of lam*delta: a when k == 0, and 0 when
    # k >= 1 because q does not divide b < q^(h-k)
    pivot = a if k == 0 else 0
    tie = pivot + lam - q == (2 * a) % lam
    if k == 0:
        if b >= a:
            return delta
        if (2 * a) % lam == 0:
            return (a * q**h + a) // lam
        return (a * q**h + a) // lam + (2 if tie else 1)
    if b > a * q ** (2 * k):
        return delta
    return (a * q ** (h + k) + a * q ** (2 * k)) // lam + (2 if tie else 1)
