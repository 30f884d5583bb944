"""Pure-Python coset kernels. Reference semantics for the compiled twin."""

import numpy as np

from .errors import OrbitTooLong

MAX_ORBIT = 10**6


def orbit_min_size(a, n, q):
    """Return (min, size) of the orbit of ``a mod n`` under x -> x*q mod n."""
    a %= n
    lo, size, x = a, 1, (a * q) % n
    while x != a:
        if x < lo:
            lo = x
        size += 1
        if size > MAX_ORBIT:
            raise OrbitTooLong(f"orbit of {a} mod {n} exceeds {MAX_ORBIT} steps")
        x = (x * q) % n
    return lo, size


def is_leader(a, n, q):
    a %= n
    x, steps = (a * q) % n, 1
    while x != a:
        if x < a:
            return False
        steps += 1
        if steps > MAX_ORBIT:
            raise OrbitTooLong(f"orbit of {a} mod {n} exceeds {MAX_ORBIT} steps")
        x = (x * q) % n
    return True


def leader_table(n, q):
    """sizes[a] = |C_n(a)| when a is a coset leader, else 0."""
    seen = bytearray(n)
    sizes = [0] * n
    for a in range(n):
        if seen[a]:
            continue
        x, size = a, 0
        while True:
            seen[x] = 1
            size += 1
            x = (x * q) % n
            if x == a:
                break
        sizes[a] = size
    return np.array(sizes, dtype=np.int64)


def union_count(start, count, n, q):
    """|C_n(start) U ... U C_n(start + count - 1)|, exponents taken mod n."""
    seen = bytearray(n)
    total = 0
    for a in range(start, start + count):
        a %= n
        if seen[a]:
            continue
        x = a
        while not seen[x]:
            seen[x] = 1
            total += 1
            x = (x * q) % n
    return total


def next_leader(start, n, q):
    """Smallest coset leader in [start, n-1], or -1 if there is none."""
    for a in range(start, n):
        if is_leader(a, n, q):
            return a
    return -1
