"""Verification sweeps comparing every closed form with its brute-force twin.

Work is sharded by (q, m, lam) across processes; results are sorted before
they are returned, so the output does not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, NamedTuple

from . import bose as B
from . import classify as C
from . import dimension as D
from . import lemmas as L
from .errors import NotAnInteger
from .intmath import divisors
from .params import BchParams
from .reference import SweepOracle, assertion_counts_brute

PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9)


class Mismatch(NamedTuple):
    check: str
    point: tuple
    got: object
    want: object


def grid(q_max: int = 9, m_min: int = 4, m_max: int = 8, max_modulus: int = 2**20):
    """(q, m, lam) triples with q a listed prime power <= q_max and q^m - 1 <= max_modulus."""
    out = []
    for q in PRIME_POWERS:
        if q > q_max:
            continue
        for m in range(m_min, m_max + 1):
            if q**m - 1 > max_modulus:
                continue
            out.extend((q, m, lam) for lam in divisors(q - 1))
    return out


def worker_count(requested: int | None = None) -> int:
    env = os.environ.get("BCH_PARALLEL")
    if env:
        return max(1, int(env))
    if requested:
        return max(1, requested)
    return 1


def run(task: Callable, points: Iterable, workers: int | None = None) -> list[Mismatch]:
    points = list(points)
    n = worker_count(workers)
    if n == 1 or len(points) < 2:
        chunks = [task(pt) for pt in points]
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            chunks = list(pool.map(task, points))
    return sorted((mm for chunk in chunks for mm in chunk), key=repr)


# --- per-point tasks (top-level so they pickle) ----------------------------------


def check_formulas(point) -> list[Mismatch]:
    """dimension and bose_distance against the leader-table oracle, every delta in range."""
    p = BchParams(*point)
    o = SweepOracle(p)
    out = []
    for delta in range(2, p.dim_delta_max + 1):
        got, want = D.dimension(p, delta), o.dimension(delta)
        if got != want:
            out.append(Mismatch("dimension", point + (delta,), got, want))
    for delta in range(2, p.bose_delta_max + 1):
        got, want = B.bose_distance(p, delta), o.bose(delta)
        if got != want:
            out.append(Mismatch("bose", point + (delta,), got, want))
    return out


def special_points(p: BchParams):
    """(k, a, b, delta) for every admissible special-family parameter with integral delta."""
    q, m, h = p.q, p.m, p.h
    for k in range(1 if m % 2 else 0, p.top - h + 1):
        b_hi = q ** (h - k + 1) if m % 2 else q ** (h - k)
        for a in range(1, q):
            for b in range(p.lam, b_hi + 1):
                if b % q == 0:
                    continue
                try:
                    yield k, a, b, D.special_delta(p, k, a, b)
                except NotAnInteger:
                    continue


def check_fast_paths(point) -> list[Mismatch]:
    """Every fast path against the general formulas on its whole domain."""
    p = BchParams(*point)
    out = []

    def cmp(name, args, fast, general):
        try:
            got = fast()
        except ArithmeticError as exc:
            got = f"error: {exc}"
        want = general()
        if got != want:
            out.append(Mismatch(name, point + args, got, want))

    if p.m % 2 == 0:
        for delta in range(2, min(p.scaled(p.h + 1) + 1, p.dim_delta_max) + 1):
            cmp("dimension_even_small", (delta,), lambda: D.dimension_even_small(p, delta),
                lambda: D.dimension(p, delta))
    elif p.m >= 5:
        for delta in range(2, min(p.scaled(p.h + 2) + 1, p.dim_delta_max) + 1):
            cmp("dimension_odd_small", (delta,), lambda: D.dimension_odd_small(p, delta),
                lambda: D.dimension(p, delta))
    if p.m % 2 == 0 or p.m >= 5:
        for k, a, b, delta in special_points(p):
            if delta <= p.dim_delta_max:
                cmp("dimension_special_ab", (k, a, b), lambda: D.dimension_special_ab(p, k, a, b),
                    lambda: D.dimension(p, delta))
            if delta <= p.bose_delta_max:
                cmp("bose_special_ab", (k, a, b), lambda: B.bose_special_ab(p, k, a, b),
                    lambda: B.bose_distance(p, delta))
    return out


def check_assertions(point) -> list[Mismatch]:
    p = BchParams(*point)
    out = []
    for delta in range(2, p.dim_delta_max + 1):
        got, want = D.count_assertions(p, delta), assertion_counts_brute(p, delta)
        if got != want:
            out.append(Mismatch("assertions", point + (delta,), got, want))
    return out


def check_structure(point) -> list[Mismatch]:
    """Digit classes against orbit-walking membership, for every band k of (q, m)."""
    q, m = point
    out = []
    for k in C.k_range(m):
        classes = C.classify_band(q, m, k)
        seen: dict[int, int] = {}
        for i, members in classes.items():
            for a in members:
                if a in seen:
                    out.append(Mismatch("disjoint", (q, m, k, a), (seen[a], i), None))
                seen[a] = i
        for a in C.band(q, m, k):
            brute = C.in_S_brute(a, q, m) or (m % 2 == 0 and C.in_H_brute(a, q, m))
            if brute != (a in seen):
                out.append(Mismatch("union", (q, m, k, a), a in seen, brute))
            if m % 2 == 0 and k >= 0:
                pal = C.in_H_palindrome(a, q, m, k)
                if pal != C.in_H_brute(a, q, m):
                    out.append(Mismatch("palindrome", (q, m, k, a), pal, not pal))
    return out


# --- lemma identities --------------------------------------------------------


LEMMA_GRIDS = {
    "small": dict(qs=(2, 3, 4, 5), xy=20, ks=(1, 2)),
    "full": dict(qs=PRIME_POWERS, xy=50, ks=(1, 2, 3)),
}


def check_lemmas_for_q(args) -> list[Mismatch]:
    q, xy, ks = args
    out = []

    def cmp(name, point, closed, brute):
        try:
            got = closed()
        except ArithmeticError as exc:
            got = f"error: {exc}"
        if got != brute:
            out.append(Mismatch(name, point, got, brute))

    for lam in divisors(q - 1):
        for x in range(1, xy + 1):
            for y in range(1, xy + 1):
                cmp("count_shifted_multiples", (x, y, lam, q),
                    lambda: L.count_shifted_multiples(x, y, lam, q),
                    L.brute_count_shifted_multiples(x, y, lam, q))
        for x in range(0, xy + 1):
            for y in range(x, xy + 1):
                cmp("count_double_multiples", (x, y, lam, q),
                    lambda: L.count_double_multiples(x, y, lam, q),
                    L.brute_count_double_multiples(x, y, lam, q))
            for y in range(0, xy + 1):
                cmp("sum_floor_diff", (x, y, lam, q),
                    lambda: L.sum_floor_diff(x, y, lam, q), L.brute_sum_floor_diff(x, y, lam, q))
            if x % 2 == 0:
                cmp("sum_double_vs_single", (x, lam, q),
                    lambda: L.sum_double_vs_single(x, lam, q), L.brute_sum_double_vs_single(x, lam, q))
        for a in range(1, q + 1):
            cmp("sum_carry_triangle", (a, lam, q),
                lambda: L.sum_carry_triangle(a, lam, q), L.brute_sum_carry_triangle(a, lam, q))
        for k in ks:
            table = L.brute_band_2t_by_a(k, lam, q)
            for a in range(1, q + 1):
                cmp("sum_band_2t", (k, a, lam, q), lambda: L.sum_band_2t(k, a, lam, q), table[a])
            for variant in L.Step:
                for i in L.band_shift_indices(k, variant):
                    table = L.brute_band_shift_by_a(k, i, lam, q, variant)
                    for a in range(1, q + 1):
                        cmp("sum_band_shift", (k, a, i, lam, q, variant.value),
                            lambda: L.sum_band_shift(k, a, i, lam, q, variant), table[a])
    for k in (0,) + tuple(ks):
        table = L.brute_N_band_by_a(k, q)
        for a in range(1, q + 1):
            cmp("sum_N_band", (k, a, q), lambda: L.sum_N_band(k, a, q), table[a])
    return out


def lemma_points(name: str = "full"):
    g = LEMMA_GRIDS[name]
    return [(q, g["xy"], g["ks"]) for q in g["qs"]]
