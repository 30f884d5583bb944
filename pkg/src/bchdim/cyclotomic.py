"""q-cyclotomic cosets modulo n, computed by walking orbits."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import kernels
from .errors import BadLambda, BadRange, NotCoprime, OrbitTooLong, OutOfTheoremRange
from .errors import ValueOutOfRange
from .intmath import divisors


@dataclass(frozen=True)
class CosetSummary:
    leader: int
    size: int
    members: tuple[int, ...]


def _check(n: int, q: int) -> None:
    if n < 1:
        raise BadRange(f"modulus must be positive, got {n}")
    if q < 2:
        raise BadRange(f"q must be >= 2, got {q}")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")


def _check_residue(a: int, n: int) -> None:
    if not 0 <= a < n:
        raise ValueOutOfRange(f"{a} is not a residue in [0, {n - 1}]")


def multiplicative_order(q: int, n: int) -> int:
    """ord_n(q); 1 for n == 1."""
    _check(n, q)
    if n == 1:
        return 1
    x, e = q % n, 1
    while x != 1:
        x = (x * q) % n
        e += 1
        if e > kernels._pykernels.MAX_ORBIT:
            raise OrbitTooLong(f"ord_{n}({q}) exceeds guard")
    return e


def coset(a: int, n: int, q: int) -> CosetSummary:
    _check(n, q)
    _check_residue(a, n)
    members = {a}
    x = (a * q) % n
    while x != a:
        members.add(x)
        if len(members) > kernels._pykernels.MAX_ORBIT:
            raise OrbitTooLong(f"orbit of {a} mod {n} exceeds guard")
        x = (x * q) % n
    ordered = tuple(sorted(members))
    return CosetSummary(ordered[0], len(ordered), ordered)


def coset_size(a: int, n: int, q: int) -> int:
    _check(n, q)
    _check_residue(a, n)
    return kernels.orbit_min_size(a, n, q)[1]


def is_coset_leader(a: int, n: int, q: int) -> bool:
    _check(n, q)
    _check_residue(a, n)
    return kernels.is_leader(a, n, q)


def leader_table(n: int, q: int):
    """Array whose entry a is |C_n(a)| if a is a coset leader, else 0."""
    _check(n, q)
    return kernels.leader_table(n, q)


def leaders_in_range(
    c: int, d: int, n: int, q: int, size_filter: int | None = None, *, sieve: bool = False
) -> list[int]:
    """Coset leaders modulo n in [c, d], optionally only those of coset size ``size_filter``.

    The default path checks each candidate separately. ``sieve=True`` builds the
    whole leader table instead, which is faster when [c, d] covers most of
    [0, n-1].
    """
    _check(n, q)
    if not 0 <= c <= d <= n - 1:
        raise BadRange(f"need 0 <= c <= d <= n-1, got c={c}, d={d}, n={n}")
    if sieve:
        sizes = kernels.leader_table(n, q)
        return [
            a
            for a in range(c, d + 1)
            if sizes[a] and (size_filter is None or sizes[a] == size_filter)
        ]
    out = []
    for a in range(c, d + 1):
        if not kernels.is_leader(a, n, q):
            continue
        if size_filter is not None and kernels.orbit_min_size(a, n, q)[1] != size_filter:
            continue
        out.append(a)
    return out


def coset_size_closed(a: int, q: int, m: int, lam: int) -> int:
    """|C_{q^m-1}(a)| for 1 <= a < q^(m - floor(m/3)) without walking the orbit."""
    if lam < 1 or (q - 1) % lam:
        raise BadLambda(f"lambda={lam} does not divide q-1={q - 1}")
    bound = q ** (m - m // 3)
    if not 1 <= a < bound:
        raise OutOfTheoremRange(f"a={a} outside [1, {bound - 1}]")
    if m % 2:
        return m
    modulus = q**m - 1
    return m // 2 if (a * q ** (m // 2)) % modulus == a else m


def lambda_choices(q: int) -> list[int]:
    return divisors(q - 1)
