"""Closed-form floor-sum and counting identities, each paired with a literal evaluator.

The closed forms enforce the hypotheses under which they hold (mainly
``lam | q - 1``). The ``brute_*`` twins evaluate the defining sum or count term
by term and accept any arguments, so they can also probe outside those
hypotheses.
"""

from __future__ import annotations

import enum
from fractions import Fraction

import numpy as np

from .errors import BadIndex, BadLambda, BadRange, OddX
from .intmath import count_nondiv, exact, floor_scaled


class Step(enum.Enum):
    ODD_STEP = "odd"  # exponents 2i-1 / 2i-2
    EVEN_STEP = "even"  # exponents 2i / 2i-1


def _check_lambda(lam: int, q: int) -> None:
    if q < 2:
        raise BadRange(f"q must be >= 2, got {q}")
    if lam < 1 or (q - 1) % lam:
        raise BadLambda(f"lambda={lam} does not divide q-1={q - 1}")


def _check_a(a: int, q: int) -> None:
    if not 1 <= a <= q:
        raise BadRange(f"a={a} outside [1, {q}]")


def _sign(lam: int) -> int:
    """(-1)^lam."""
    return -1 if lam % 2 else 1


# --- counts -----------------------------------------------------------------


def count_shifted_multiples(x: int, y: int, lam: int, q: int) -> int:
    """|{alpha in [1, x] : q does not divide alpha, lam | alpha + y}|."""
    _check_lambda(lam, q)
    if x < 1 or y < 1:
        raise BadRange(f"x and y must be positive, got x={x}, y={y}")
    return (x + y) // lam - (x // q + y) // lam


def brute_count_shifted_multiples(x, y, lam, q):
    return sum(1 for a in range(1, x + 1) if a % q and (a + y) % lam == 0)


def count_double_multiples(x: int, y: int, lam: int, q: int) -> int:
    """|{alpha in [x, y] : lam | 2 alpha, q does not divide alpha}|."""
    _check_lambda(lam, q)
    if x > y:
        raise BadRange(f"need x <= y, got x={x}, y={y}")
    up = -(-x // q)  # ceil(x / q)
    if lam % 2:
        return y // lam - (x - 1) // lam - (y // q) // lam + (up - 1) // lam
    return (2 * y) // lam - (2 * x - 2) // lam - (2 * (y // q)) // lam + (2 * up - 2) // lam


def brute_count_double_multiples(x, y, lam, q):
    return sum(1 for a in range(x, y + 1) if (2 * a) % lam == 0 and a % q)


# --- floor sums ---------------------------------------------------------------


def sum_floor_diff(x: int, y: int, lam: int, q: int) -> int:
    _check_lambda(lam, q)
    return exact(Fraction((q - 1) * (x - y), lam))


def brute_sum_floor_diff(x, y, lam, q):
    return sum((t + x) // lam - (t + y) // lam for t in range(1, q))


def sum_carry_triangle(a: int, lam: int, q: int) -> int:
    _check_lambda(lam, q)
    _check_a(a, q)
    return exact(Fraction(a * (a - 1) * (q - 1), 2 * lam))


def brute_sum_carry_triangle(a, lam, q):
    return sum((t // q + t) // lam - t // lam for t in range(q, a * q + 1) if t % q)


def sum_double_vs_single(x: int, lam: int, q: int) -> int:
    _check_lambda(lam, q)
    if x % 2:
        raise OddX(f"x must be even, got {x}")
    if lam % 2:
        return exact(Fraction(q * (q - 1), 2 * lam))
    return exact(Fraction((q - 1) * (q + 1), 2 * lam))


def brute_sum_double_vs_single(x, lam, q):
    return sum((2 * t + x) // lam - (t + x) // lam for t in range(1, q))


def sum_band_2t(k: int, a: int, lam: int, q: int) -> int:
    _check_lambda(lam, q)
    _check_a(a, q)
    if k < 1:
        raise BadRange(f"k must be >= 1, got {k}")
    return exact(
        Fraction((a * a - 1) * (q - 1) ** 2 * q ** (2 * k - 2), 2 * lam)
        + Fraction((3 + _sign(lam)) * (a - 1) * (q - 1) * q ** (k - 1), 4 * lam)
    )


def brute_sum_band_2t(k, a, lam, q):
    return sum(
        (2 * t) // lam - (t // q + t) // lam
        for t in range(q**k, a * q**k)
        if t % q
    )


def sum_N_band(k: int, a: int, q: int) -> int:
    if q < 2:
        raise BadRange(f"q must be >= 2, got {q}")
    _check_a(a, q)
    if k < 0:
        raise BadRange(f"k must be >= 0, got {k}")
    if k == 0:
        return a * (a - 1) // 2
    return exact(Fraction((a * a - 1) * (q - 1) * q ** (2 * k - 1), 2))


def brute_sum_N_band(k, a, q):
    return sum(count_nondiv(t + 1, q) for t in range(q**k, a * q**k))


def _step_exponents(variant: Step, i: int) -> tuple[int, int]:
    return (2 * i - 1, 2 * i - 2) if variant is Step.ODD_STEP else (2 * i, 2 * i - 1)


def sum_band_shift(k: int, a: int, i: int, lam: int, q: int, variant: Step) -> int:
    """Closed form of sum over t in [q^(k-i), a q^(k-i) - 1], q not dividing t, of
    floor((floor(t q^e1) + t)/lam) - floor((floor(t q^e2) + t)/lam)
    with (e1, e2) = (2i-1, 2i-2) for ODD_STEP and (2i, 2i-1) for EVEN_STEP.
    """
    _check_lambda(lam, q)
    _check_a(a, q)
    if k < 1:
        raise BadRange(f"k must be >= 1, got {k}")
    variant = Step(variant)
    if variant is Step.ODD_STEP:
        if not -k + 1 <= i <= k:
            raise BadIndex(f"i={i} outside [{-k + 1}, {k}]")
        if i in (k, -k + 1):
            return exact(Fraction(a * (a - 1) * (q - 1) * q ** (2 * k - 2), 2 * lam))
        return exact(Fraction((a * a - 1) * (q - 1) ** 2 * q ** (2 * k - 3), 2 * lam))
    if not -k <= i <= k or i == 0:
        raise BadIndex(f"i={i} outside [{-k}, {k}] minus 0")
    if i in (k, -k):
        return exact(Fraction(a * (a - 1) * (q - 1) * q ** (2 * k - 1), 2 * lam))
    return exact(Fraction((a * a - 1) * (q - 1) ** 2 * q ** (2 * k - 2), 2 * lam))


def band_shift_indices(k: int, variant: Step) -> range | list[int]:
    """Indices i accepted by :func:`sum_band_shift`."""
    if Step(variant) is Step.ODD_STEP:
        return range(-k + 1, k + 1)
    return [i for i in range(-k, k + 1) if i]


def shift_term(t: int, i: int, lam: int, q: int, variant: Step) -> int:
    """One summand of :func:`sum_band_shift` (also used by the dimension formulas)."""
    e1, e2 = _step_exponents(Step(variant), i)
    return (floor_scaled(t, q, e1) + t) // lam - (floor_scaled(t, q, e2) + t) // lam


def brute_sum_band_shift(k, a, i, lam, q, variant):
    return brute_band_shift_by_a(k, i, lam, q, variant)[a]


# --- vectorised literal evaluators ----------------------------------------------
#
# Each returns {a: value} for every a in [1, q] from one cumulative sum over
# the widest interval, since the intervals for consecutive a are nested.


def _floor_scaled_vec(t: np.ndarray, q: int, e: int) -> np.ndarray:
    if e >= 0:
        return t * np.int64(q**e)
    return np.floor_divide(t, np.int64(q ** (-e)))


def _by_a(terms: np.ndarray, t: np.ndarray, base: int, q: int) -> dict[int, int]:
    terms = np.where(t % q != 0, terms, 0)
    csum = np.concatenate(([0], np.cumsum(terms, dtype=np.int64)))
    return {a: int(csum[(a - 1) * base]) for a in range(1, q + 1)}


def brute_band_shift_by_a(k, i, lam, q, variant):
    e1, e2 = _step_exponents(Step(variant), i)
    base = q ** (k - i)
    t = np.arange(base, q * base, dtype=np.int64)
    terms = (_floor_scaled_vec(t, q, e1) + t) // lam - (_floor_scaled_vec(t, q, e2) + t) // lam
    return _by_a(terms, t, base, q)


def brute_band_2t_by_a(k, lam, q):
    base = q**k
    t = np.arange(base, q * base, dtype=np.int64)
    return _by_a((2 * t) // lam - (t // q + t) // lam, t, base, q)


def brute_N_band_by_a(k, q):
    base = q**k
    t = np.arange(base, q * base, dtype=np.int64)
    # N(t + 1) = t - floor(t / q); every t counts, so bypass the q-filter
    terms = t - t // q
    csum = np.concatenate(([0], np.cumsum(terms, dtype=np.int64)))
    return {a: int(csum[(a - 1) * base]) for a in range(1, q + 1)}
