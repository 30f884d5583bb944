"""Digit-pattern classes of integers modulo q^m - 1.

Two families of tests live here. The ``*_brute`` predicates decide membership
in S (non-leaders coprime to q) and H (leaders of half-size cosets) by walking
orbits. The structural predicates (``in_A``, ``in_B``, ``in_H_palindrome``)
read only the q-adic digits of ``a``; on each band [q^(h+k), q^(h+k+1)) the
two families describe the same sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .errors import BadIndex, BadRange, BandMismatch, NotMember, OddM, WrongParity
from .intmath import Digits, Ordering, floor_scaled, lex_compare, qadic_expand


@dataclass(frozen=True)
class BandElement:
    a: int
    k: int
    i: int
    t: int
    alpha: int

    def lambda_divides(self, lam: int) -> bool:
        """lam | a, decided through t + alpha (valid whenever lam | q - 1)."""
        return (self.t + self.alpha) % lam == 0


class BandConditions(NamedTuple):
    """The three defining conditions of A_k(i) / B_k(i), evaluated separately."""

    index_ok: bool  # a_{h+i} > 0 and i is the smallest such index
    zeros_ok: bool  # zero blocks of the digit pattern
    order_ok: bool  # low block <= high block (lexicographic) and a_0 > 0

    def all(self) -> bool:
        return self.index_ok and self.zeros_ok and self.order_ok


def _modulus(q: int, m: int) -> int:
    return q**m - 1


def _check_a(a: int, q: int, m: int) -> None:
    if not 1 <= a <= q**m - 2:
        raise BadRange(f"a={a} outside [1, {q}^{m} - 2]")


def in_S_brute(a: int, q: int, m: int) -> bool:
    _check_a(a, q, m)
    return a % q != 0 and not kernels.is_leader(a, _modulus(q, m), q)


def in_H_brute(a: int, q: int, m: int) -> bool:
    if m % 2:
        raise OddM(f"H is only defined for even m, got m={m}")
    _check_a(a, q, m)
    n = _modulus(q, m)
    if not kernels.is_leader(a, n, q):
        return False
    return kernels.orbit_min_size(a, n, q)[1] == m // 2


def k_range(m: int) -> range:
    """Valid band indices k for the structural classes."""
    if m < 4:
        raise BadRange(f"band classification needs m >= 4, got m={m}")
    h = m // 2
    return range(m - 2 * h, (2 * m - 1) // 3 - h + 1)


def band(q: int, m: int, k: int) -> range:
    h = m // 2
    return range(q ** (h + k), q ** (h + k + 1))


def _check_band(a: int, q: int, m: int, k: int) -> None:
    b = band(q, m, k)
    if a not in b:
        raise BandMismatch(f"a={a} not in [{b.start}, {b.stop})")


def _check_k(m: int, k: int) -> None:
    ks = k_range(m)
    if k not in ks:
        raise BadIndex(f"k={k} outside [{ks.start}, {ks.stop - 1}] for m={m}")


def i_range(m: int, k: int) -> range:
    return range(-k + 1, k + 1) if m % 2 else range(-k, k + 1)


def in_H_palindrome(a: int, q: int, m: int, k: int) -> bool:
    """Digit test: V(a) == (0.., a_k..a_0, 0.., a_k..a_0) with a_0, a_k > 0."""
    if m % 2:
        raise OddM(f"H is only defined for even m, got m={m}")
    h = m // 2
    if not 0 <= k <= (2 * m - 1) // 3 - h:
        raise BadIndex(f"k={k} outside [0, {(2 * m - 1) // 3 - h}]")
    _check_band(a, q, m, k)
    v = qadic_expand(a, q, m)
    d = v.digit
    if d(0) == 0 or d(k) == 0:
        return False
    for pos in range(k + 1, h):
        if d(pos) or d(pos + h):
            return False
    return all(d(pos) == d(pos + h) for pos in range(k + 1))


def band_conditions(a: int, q: int, m: int, k: int, i: int) -> BandConditions:
    _check_k(m, k)
    if i not in i_range(m, k):
        r = i_range(m, k)
        raise BadIndex(f"i={i} outside [{r.start}, {r.stop - 1}]")
    _check_band(a, q, m, k)
    h = m // 2
    d = qadic_expand(a, q, m).digit
    first = next((j for j in i_range(m, k) if d(h + j) > 0), None)
    index_ok = first == i
    if m % 2:
        zero_lo, low_top, high_bottom = k + i, k + i - 1, h - i + 1
    else:
        zero_lo, low_top, high_bottom = k + i + 1, k + i, h - i
    zeros_ok = all(d(pos) == 0 for pos in range(zero_lo, h + i))
    low = Digits(q, tuple(d(pos) for pos in range(low_top, -1, -1)))
    high = Digits(q, tuple(d(pos) for pos in range(h + k, high_bottom - 1, -1)))
    order_ok = d(0) > 0 and lex_compare(low, high) != Ordering.GT
    return BandConditions(index_ok, zeros_ok, order_ok)


def in_A(a: int, q: int, m: int, k: int, i: int) -> bool:
    """Membership in A_k(i) (odd m)."""
    if m % 2 == 0:
        raise WrongParity(f"A_k(i) is defined for odd m, got m={m}")
    return band_conditions(a, q, m, k, i).all()


def in_B(a: int, q: int, m: int, k: int, i: int) -> bool:
    """Membership in B_k(i) (even m)."""
    if m % 2:
        raise WrongParity(f"B_k(i) is defined for even m, got m={m}")
    return band_conditions(a, q, m, k, i).all()


def split(a: int, q: int, m: int, k: int, i: int) -> BandElement:
    """The (t, alpha) split of ``a`` at position h+i, without a membership check."""
    _check_band(a, q, m, k)
    h = m // 2
    v = qadic_expand(a, q, m)
    t = v.window(h + i, h + k, shift=h + i)
    alpha = v.window(0, k + i - 1) if m % 2 else v.window(0, k + i)
    return BandElement(a, k, i, t, alpha)


def decompose(a: int, q: int, m: int, k: int, i: int) -> BandElement:
    if not band_conditions(a, q, m, k, i).all():
        raise NotMember(f"a={a} is not in the k={k}, i={i} class for q={q}, m={m}")
    return split(a, q, m, k, i)


def alpha_bound(t: int, q: int, m: int, i: int) -> int:
    """floor(t * q^(2i-1)) for odd m, floor(t * q^(2i)) for even m."""
    return floor_scaled(t, q, 2 * i - 1 if m % 2 else 2 * i)


def bound_holds(elem: BandElement, q: int, m: int) -> bool:
    """Arithmetic form of the order condition: 1 <= alpha <= bound, q does not divide alpha."""
    return 1 <= elem.alpha <= alpha_bound(elem.t, q, m, elem.i) and elem.alpha % q != 0


def classify_band(q: int, m: int, k: int) -> dict[int, list[int]]:
    """Members of every A_k(i) (odd m) or B_k(i) (even m), keyed by i."""
    _check_k(m, k)
    out: dict[int, list[int]] = {i: [] for i in i_range(m, k)}
    h = m // 2
    for a in band(q, m, k):
        d = qadic_expand(a, q, m).digit
        i = next((j for j in i_range(m, k) if d(h + j) > 0), None)
        if i is not None and band_conditions(a, q, m, k, i).all():
            out[i].append(a)
    return out
