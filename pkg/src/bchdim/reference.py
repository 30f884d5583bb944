"""Brute-force oracles. Everything here walks cosets; no closed form is used."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import kernels
from .classify import classify_band, k_range
from .dimension import AssertionCounts, assertion_threshold, delta_profile
from .errors import BadRange
from .params import BchParams


def _check(p: BchParams, delta: int, b: int) -> None:
    if delta < 2:
        raise BadRange(f"delta must be >= 2, got {delta}")
    if b < 0:
        raise BadRange(f"b must be >= 0, got {b}")
    if b + delta - 2 > p.n - 1:
        raise BadRange(f"b + delta - 2 = {b + delta - 2} exceeds n - 1 = {p.n - 1}")


def union_mask(p: BchParams, b: int, count: int) -> bytearray:
    """Indicator of C_n(b) U ... U C_n(b + count - 1) over [0, n-1]."""
    n, q = p.n, p.q
    seen = bytearray(n)
    for a in range(b, b + count):
        x = a % n
        while not seen[x]:
            seen[x] = 1
            x = (x * q) % n
    return seen


def dimension_oracle(p: BchParams, delta: int, b: int = 1) -> int:
    """n - |C_n(b) U ... U C_n(b + delta - 2)|."""
    _check(p, delta, b)
    return p.n - kernels.union_count(b, delta - 1, p.n, p.q)


def bose_oracle(p: BchParams, delta: int, b: int = 1) -> int:
    """Largest delta' >= delta whose defining set equals that of delta.

    For b = 1 this is the smallest coset leader >= delta (n if there is none).
    """
    _check(p, delta, b)
    n = p.n
    if b == 1:
        lead = kernels.next_leader(delta, n, p.q)
        return n if lead < 0 else lead
    seen = union_mask(p, b, delta - 1)
    d = delta
    while b + d - 1 <= b + n - 2 and seen[(b + d - 1) % n]:
        d += 1
    return d


# --- table-driven oracles for sweeps --------------------------------------------


@lru_cache(maxsize=64)
def _tables(q: int, m: int, lam: int):
    p = BchParams(q, m, lam)
    sizes = kernels.leader_table(p.n, q)
    # covered[d] = |union of C_n(a) for a in [1, d-1]| = sum of sizes of leaders in [1, d-1]
    covered = np.concatenate(([0, 0], np.cumsum(sizes[1:], dtype=np.int64)))
    # nxt[a] = smallest leader >= a (n if none)
    idx = np.where(sizes > 0, np.arange(p.n), p.n)
    nxt = np.minimum.accumulate(idx[::-1])[::-1]
    return sizes, covered, nxt


class SweepOracle:
    """Dimension and Bose distance for every delta of one (q, m, lam) from one leader table."""

    def __init__(self, p: BchParams):
        self.p = p
        self.sizes, self._covered, self._next = _tables(p.q, p.m, p.lam)

    def dimension(self, delta: int) -> int:
        _check(self.p, delta, 1)
        return self.p.n - int(self._covered[delta])

    def bose(self, delta: int) -> int:
        _check(self.p, delta, 1)
        return int(self._next[delta])


# --- literal counts for the digit-class statements -------------------------------


@lru_cache(maxsize=64)
def _class_prefix(q: int, m: int, lam: int):
    """Prefix counts over [0, q^m - 1) of S & D and H & D modulo q^m - 1."""
    full = q**m - 1
    sizes = kernels.leader_table(full, q)
    a = np.arange(full)
    div = a % lam == 0
    in_s = (sizes == 0) & (a % q != 0) & div
    in_h = (sizes == m // 2) & div if m % 2 == 0 else np.zeros(full, dtype=bool)
    in_s[0] = in_h[0] = False
    s_pre = np.concatenate(([0], np.cumsum(in_s, dtype=np.int64)))
    h_pre = np.concatenate(([0], np.cumsum(in_h, dtype=np.int64)))
    return s_pre, h_pre


@lru_cache(maxsize=256)
def _band_classes(q: int, m: int, k: int):
    return classify_band(q, m, k)


def _count(pre, lo: int, hi: int) -> int:
    """Entries of [lo, hi] counted by a prefix array."""
    return int(pre[hi + 1] - pre[lo]) if lo <= hi else 0


def assertion_counts_brute(p: BchParams, delta: int):
    """The record of :func:`bchdim.dimension.count_assertions`, by enumeration."""
    prof = delta_profile(p, delta)
    k = prof.k_delta
    if delta <= assertion_threshold(p):
        return AssertionCounts(k)
    q, m, h, lam = p.q, p.m, p.h, p.lam
    s_pre, h_pre = _class_prefix(q, m, lam)
    L, w = prof.lam_dm1, prof.w_delta
    band_lo = q ** (h + k)
    if m % 2:
        sets = s_pre
    else:
        sets = s_pre + h_pre
    upper = _count(sets, w, L)
    lower = _count(sets, band_lo, w - 1)
    classes = {}
    if k in k_range(m) and k >= 1:
        for i, members in _band_classes(q, m, k).items():
            if m % 2 == 0 and i == 0:
                continue
            classes[i] = sum(1 for a in members if a % lam == 0)
    if m % 2:
        return AssertionCounts(k, upper, lower, classes=classes)
    hw = prof.digits.window(h, h + k)
    upper_h = _count(h_pre, hw, L)
    lower_h = _count(h_pre, band_lo, hw - 1)
    b_zero = sum(1 for a in _band_classes(q, m, k)[0] if a % lam == 0)
    h_band = _count(h_pre, band_lo, q ** (h + k + 1) - 1)
    return AssertionCounts(k, upper, lower, upper_h, lower_h, classes, b_zero, h_band)


def _upto(p: BchParams, x: int, which: int) -> int:
    if x > p.full_modulus - 1:
        raise BadRange(f"x={x} exceeds q^m - 2 = {p.full_modulus - 1}")
    return _count(_class_prefix(p.q, p.m, p.lam)[which], 1, x)


def count_S_upto(p: BchParams, x: int) -> int:
    """|[1, x] & S & D| modulo q^m - 1, S being the non-leaders prime to q."""
    return _upto(p, x, 0)


def count_H_upto(p: BchParams, x: int) -> int:
    """|[1, x] & H & D| modulo q^m - 1, H being the leaders of cosets of size m/2."""
    return _upto(p, x, 1)
