"""Closed-form dimension of narrow-sense BCH codes of length (q^m - 1)/lam.

The general formula covers 2 <= delta <= (q^(top+1) - 1)/lam + 1 with
top = floor((2m-1)/3). It counts the non-leaders below lam*(delta-1) through
the digit classes of :mod:`bchdim.classify`, so no orbit is ever walked here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadRange, NotAnInteger, UnsupportedRange, WrongParity
from .intmath import Digits, count_nondiv, exact, ilog, qadic_expand
from .lemmas import Step, shift_term
from .params import BchParams


@dataclass(frozen=True)
class DeltaProfile:
    """Digit data of lam*(delta-1). Fields a branch never reads are None."""

    delta: int
    lam_dm1: int
    digits: Digits
    k_delta: int
    s_delta: int | None = None
    w_delta: int | None = None
    mu: int | None = None
    mu_tilde: int | None = None
    phi: int | None = None
    t_sets: dict[int, range] = field(default_factory=dict)

    def t_values(self, i: int, q: int):
        """Elements of T_i: the range with multiples of q removed."""
        return (t for t in self.t_sets[i] if t % q)


def _check_dim_range(p: BchParams, delta: int) -> None:
    if p.m < 4:
        raise UnsupportedRange(f"the dimension formula needs m >= 4, got m={p.m}")
    if not 2 <= delta <= p.dim_delta_max:
        raise UnsupportedRange(
            f"delta={delta} outside the proven range [2, {p.dim_delta_max}] "
            f"for q={p.q}, m={p.m}, lambda={p.lam}"
        )


def delta_profile(p: BchParams, delta: int) -> DeltaProfile:
    _check_dim_range(p, delta)
    q, m, h = p.q, p.m, p.h
    L = p.lam * (delta - 1)
    top = ilog(L, q)
    k = top - h
    d = qadic_expand(L, q, top + 1)
    phi = d.window(h, h + k, shift=h) - 1 if k >= 0 else None
    if k < m - 2 * h:
        return DeltaProfile(delta, L, d, k, phi=phi)
    s = next(j for j in range(m - 2 * h - k, k + 1) if d.digit(h + j) > 0)
    w = d.window(h + s, h + k)
    mu = mu_tilde = None
    if m % 2:
        mu = min(d.window(0, h - k), d.window(h - s + 1, h + k, shift=h - s + 1))
        irange = range(-k + 1, k + 1)
    else:
        mu_tilde = min(d.window(0, h - k - 1), d.window(h - s, h + k, shift=h - s))
        irange = range(-k, k + 1)
    t_sets = {}
    for i in irange:
        scale = q ** (h + i)
        t_sets[i] = range(q ** (k - i), -(-w // scale))  # t < w / q^(h+i)
    return DeltaProfile(delta, L, d, k, s, w, mu, mu_tilde, phi, t_sets)


def _mu_pair(mu: int, w: int, lam: int, q: int) -> int:
    return (mu + w) // lam - (mu // q + w) // lam


def _t_sum(p: BchParams, prof: DeltaProfile, variant: Step) -> int:
    return sum(
        shift_term(t, i, p.lam, p.q, variant)
        for i in prof.t_sets
        for t in prof.t_values(i, p.q)
    )


def f_odd(p: BchParams, prof: DeltaProfile) -> int:
    if not p.m % 2:
        raise WrongParity(f"f is defined for odd m, got m={p.m}")
    q, lam, k = p.q, p.lam, prof.k_delta
    if prof.delta <= p.scaled(p.h + 1) + 1:
        return 0
    head = Fraction((q - 1) ** 2 * (k - 1)) * Fraction(q) ** (2 * k - 3) / lam
    return exact(head) + _mu_pair(prof.mu, prof.w_delta, lam, q) + _t_sum(p, prof, Step.ODD_STEP)


def f_even(p: BchParams, prof: DeltaProfile) -> int:
    if p.m % 2:
        raise WrongParity(f"f-tilde is defined for even m, got m={p.m}")
    q, lam, h, k = p.q, p.lam, p.h, prof.k_delta
    if prof.delta <= p.scaled(h) + 1:
        return 0
    pair = _mu_pair(prof.mu_tilde, prof.w_delta, lam, q)
    if prof.delta <= p.scaled(h + 1) + 1:
        dh = prof.digits.digit(h)
        return pair + sum((2 * t) // lam - t // lam for t in range(1, dh))
    sign = 1 if lam % 2 == 0 else -1
    head = (
        Fraction(q) ** (2 * k - 2) * (Fraction(k) - Fraction(1, 2)) * Fraction((q - 1) ** 2, lam)
        + Fraction(q - 1, 2 * lam) * (Fraction(q) ** (k - 1) + Fraction(1 + sign, 2))
    )
    return exact(head) + pair + _t_sum(p, prof, Step.EVEN_STEP)


def tau(p: BchParams, prof: DeltaProfile) -> int:
    if p.m % 2:
        raise WrongParity(f"tau is defined for even m, got m={p.m}")
    h, k, d = p.h, prof.k_delta, prof.digits
    if k < 0:
        return 0
    high = d.window(h, h + k, shift=h)
    digit_sum = sum(d.digit(pos) for pos in range(h, h + k + 1))
    ok = high <= d.window(0, h - 1) and d.digit(h) > 0 and (2 * digit_sum) % p.lam == 0
    return int(ok)


def _c(lam: int) -> int:
    """3 + (-1)^lam."""
    return 4 if lam % 2 == 0 else 2


def g_even(p: BchParams, prof: DeltaProfile) -> int:
    if p.m % 2:
        raise WrongParity(f"g is defined for even m, got m={p.m}")
    lam, h = p.lam, p.h
    c = _c(lam)
    if prof.delta <= p.scaled(h) + 1:
        return 0
    if prof.delta <= p.scaled(h + 1) + 1:
        return ((prof.digits.digit(h) - 1) * c) // (2 * lam) + tau(p, prof)
    phi = prof.phi
    return (phi * c) // (2 * lam) - ((phi // p.q) * c) // (2 * lam) + tau(p, prof)


def dimension(p: BchParams, delta: int) -> int:
    prof = delta_profile(p, delta)
    N = count_nondiv(delta, p.q)
    if p.m % 2:
        return p.n - p.m * (N - f_odd(p, prof))
    return p.n - p.m * (N - f_even(p, prof)) - (p.m // 2) * g_even(p, prof)


# --- fast paths ---------------------------------------------------------------


def _double_minus_single(upto: int, lam: int) -> int:
    return sum((2 * t) // lam - t // lam for t in range(1, upto + 1))


def dimension_even_small(p: BchParams, delta: int) -> int:
    if p.m % 2:
        raise WrongParity(f"this path is for even m, got m={p.m}")
    if not 2 <= delta <= p.scaled(p.h + 1) + 1:
        raise UnsupportedRange(f"delta={delta} outside [2, {p.scaled(p.h + 1) + 1}]")
    _check_dim_range(p, delta)
    q, m, h, lam, n = p.q, p.m, p.h, p.lam, p.n
    base = n - m * count_nondiv(delta, q)
    if delta <= p.scaled(h) + 1:
        return base
    d = qadic_expand(lam * (delta - 1), q, h + 1)
    dh, d0, low = d.digit(h), d.digit(0), d.window(0, h - 1)
    half = (m // 2) * (((_c(lam)) * (dh - 1)) // (2 * lam))
    sums = _double_minus_single(dh, lam)
    if dh <= low:
        extra = m // 2 if (2 * dh) % lam == 0 else 0
        return base + m * sums - half - extra
    return base + m * (sums + (d0 + dh) // lam - (2 * dh) // lam) - half


def dimension_odd_small(p: BchParams, delta: int) -> int:
    if p.m % 2 == 0 or p.m < 5:
        raise WrongParity(f"this path is for odd m >= 5, got m={p.m}")
    if not 2 <= delta <= p.scaled(p.h + 2) + 1:
        raise UnsupportedRange(f"delta={delta} outside [2, {p.scaled(p.h + 2) + 1}]")
    _check_dim_range(p, delta)
    q, m, h, lam, n = p.q, p.m, p.h, p.lam, p.n
    base = n - m * count_nondiv(delta, q)
    if delta <= p.scaled(h + 1) + 1:
        return base
    d = qadic_expand(lam * (delta - 1), q, h + 2)
    top, dh, d0, d1, low = d.digit(h + 1), d.digit(h), d.digit(0), d.digit(1), d.window(0, h - 1)
    square = Fraction(top * top * (q - 1), lam)
    if dh > 0:
        inner = square + sum((2 * top + i) // lam - (top + i) // lam for i in range(1, dh + 1))
        if top > low:
            inner += (d0 + top + dh) // lam - (2 * top + dh) // lam
        return base + m * exact(inner)
    if top * q > low:
        inner = Fraction((top * top - top + d1) * (q - 1), lam)
        inner += (d1 + d0 + top) // lam - (d1 + top) // lam
        return base + m * exact(inner)
    return base + exact(m * square)


def special_delta(p: BchParams, k: int, a: int, b: int) -> int:
    """delta = (a q^(h+k) + b)/lam after checking the parameter box of the special family."""
    q, m, h, lam = p.q, p.m, p.h, p.lam
    if p.m < 4:
        raise UnsupportedRange(f"needs m >= 4, got m={m}")
    k_lo = 1 if m % 2 else 0
    if not k_lo <= k <= p.top - h:
        raise UnsupportedRange(f"k={k} outside [{k_lo}, {p.top - h}] for m={m}")
    if not 1 <= a <= q - 1:
        raise BadRange(f"a={a} outside [1, {q - 1}]")
    b_hi = q ** (h - k + 1) if m % 2 else q ** (h - k)
    if not lam <= b <= b_hi or b % q == 0:
        raise BadRange(f"b={b} must lie in [{lam}, {b_hi}] and not be a multiple of q={q}")
    num = a * q ** (h + k) + b
    if num % lam:
        raise NotAnInteger(f"lambda={lam} does not divide a*q^(h+k)+b={num}")
    return num // lam


def dimension_special_ab(p: BchParams, k: int, a: int, b: int) -> int:
    delta = special_delta(p, k, a, b)
    _check_dim_range(p, delta)
    q, m, h, lam, n = p.q, p.m, p.h, p.lam, p.n
    N = count_nondiv(delta, q)
    F = Fraction
    if m % 2:
        qk = F(q) ** (2 * k - 3)
        if b >= a * q ** (2 * k - 1) + lam:
            return n - m * N + exact(F(q - 1, lam) * m * a * a * qk * ((q - 1) * k + 1))
        return exact(
            n
            - F(q - 1, lam) * m * a * q ** (h + k - 1)
            + F(q - 1, lam) * m * a * qk * (a * (q - 1) * k + a - q)
        )
    if k == 0:
        c = _c(lam)
        sums = _double_minus_single(a, lam)
        g_part = (m // 2) * (((a - 1) * c) // (2 * lam))
        if b < a + lam:
            return n - m * N + m * ((a + b - lam) // lam - (2 * a) // lam + sums) - g_part
        if (2 * a) % lam:
            return n - m * N + m * sums - g_part
        return n - m * N + m * sums - g_part - m // 2
    qk = F(q) ** (2 * k - 2)
    half_k = F(k) - F(1, 2)
    even_corr = F(m * (q - 1) * (q ** (k - 1) - 1), 2 * lam) if lam % 2 == 0 else 0
    if b > a * q ** (2 * k) + lam:
        val = n - m * N + m * F(q - 1, lam) * a * a * qk * (half_k * (q - 1) + q)
    else:
        val = (
            n
            + m * F(q - 1, lam) * a * qk * (a * half_k * (q - 1) + (a - 1) * q)
            - F(m * a * q ** (h + k - 1) * (q - 1), lam)
        )
    return exact(val - even_corr)


# --- the five counting statements behind the formula ----------------------------


@dataclass(frozen=True)
class AssertionCounts:
    """Counts of multiples of lam in the digit classes used by :func:`dimension`.

    ``upper``/``lower`` count S (odd m) or S U H (even m) on [w, lam(delta-1)]
    and [q^(h+k), w). ``upper_h``/``lower_h`` do the same for H alone, with w
    replaced by the digits of lam(delta-1) at positions >= h. ``classes`` maps
    each index i to |A_k(i) & D| or |B_k(i) & D| (i != 0); ``b_zero`` is
    |B_k(0) & D| and ``h_band`` the H count on the whole band. Fields that do
    not apply to the parity of m are None; below the threshold every count is 0.
    """

    k: int
    upper: int = 0
    lower: int = 0
    upper_h: int | None = None
    lower_h: int | None = None
    classes: dict[int, int] = field(default_factory=dict)
    b_zero: int | None = None
    h_band: int | None = None


def assertion_threshold(p: BchParams) -> int:
    """The counts are stated for delta above this value."""
    return p.scaled(p.m - p.h) + 1


def class_counts(p: BchParams, k: int) -> dict[int, int]:
    """|A_k(i) & D| (odd m) or |B_k(i) & D| for i != 0 (even m); needs k >= 1."""
    if k < 1:
        raise BadRange(f"k must be >= 1, got {k}")
    q, lam = p.q, p.lam
    F = Fraction
    out = {}
    if p.m % 2:
        for i in range(-k + 1, k + 1):
            if i in (-k + 1, k):
                out[i] = exact(F((q - 1) ** 2 * q ** (2 * k - 1), 2 * lam))
            else:
                out[i] = exact(F((q - 1) ** 3 * (q + 1)) * F(q) ** (2 * k - 3) / (2 * lam))
        return out
    for i in range(-k, k + 1):
        if i == 0:
            continue
        if i in (-k, k):
            out[i] = exact(F((q - 1) ** 2 * q ** (2 * k), 2 * lam))
        else:
            out[i] = exact(F((q - 1) ** 3 * (q + 1) * q ** (2 * k - 2), 2 * lam))
    return out


def b_zero_count(p: BchParams, k: int) -> int:
    """|B_k(0) & D| for even m."""
    if p.m % 2:
        raise WrongParity(f"B_k(0) needs even m, got m={p.m}")
    q, lam = p.q, p.lam
    if k == 0:
        num = q * (q - 1) if lam % 2 else (q + 1) * (q - 1)
        return exact(Fraction(num, 2 * lam))
    extra = q ** (k - 1) if lam % 2 else 2 * q ** (k - 1)
    return exact(Fraction((q - 1) ** 2 * (q ** (2 * k) - q ** (2 * k - 2) + extra), 2 * lam))


def h_band_count(p: BchParams, k: int) -> int:
    """|[q^(h+k), q^(h+k+1)) & H & D| for even m."""
    if p.m % 2:
        raise WrongParity(f"H needs even m, got m={p.m}")
    q, lam = p.q, p.lam
    mult = 1 if lam % 2 else 2
    val = q - 1 if k == 0 else (q - 1) ** 2 * q ** (k - 1)
    return exact(Fraction(mult * val, lam))


def count_assertions(p: BchParams, delta: int) -> AssertionCounts:
    prof = delta_profile(p, delta)
    k = prof.k_delta
    if delta <= assertion_threshold(p):
        return AssertionCounts(k)
    q, lam, h = p.q, p.lam, p.h
    classes = class_counts(p, k) if k >= 1 else {}
    if p.m % 2:
        upper = _mu_pair(prof.mu, prof.w_delta, lam, q)
        lower = _t_sum(p, prof, Step.ODD_STEP)
        return AssertionCounts(k, upper, lower, classes=classes)
    upper = _mu_pair(prof.mu_tilde, prof.w_delta, lam, q)
    lower = _t_sum(p, prof, Step.EVEN_STEP)
    c = _c(lam)
    if k == 0:
        lower_h = ((prof.digits.digit(h) - 1) * c) // (2 * lam)
    else:
        phi = prof.phi
        lower_h = (phi * c) // (2 * lam) - ((phi // q) * c) // (2 * lam)
        lower_h -= exact(Fraction(q ** (k - 1) * (q - 1) * c, 2 * lam))
    return AssertionCounts(
        k, upper, lower, tau(p, prof), lower_h, classes, b_zero_count(p, k), h_band_count(p, k)
    )
