# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coset kernels; same contract as ``_pykernels``.

Callers must keep ``n * q`` below 2**63; the dispatcher in ``kernels``
routes larger moduli to the pure-Python backend.
"""

import numpy as np
cimport numpy as cnp

from .errors import OrbitTooLong

ctypedef long long i64

cdef i64 MAX_ORBIT = 1000000

cnp.import_array()


def orbit_min_size(i64 a, i64 n, i64 q):
    cdef i64 lo, size, x
    a = a % n
    lo = a
    size = 1
    x = (a * q) % n
    while x != a:
        if x < lo:
            lo = x
        size += 1
        if size > MAX_ORBIT:
            raise OrbitTooLong(f"orbit of {a} mod {n} exceeds {MAX_ORBIT} steps")
        x = (x * q) % n
    return lo, size


cdef inline int _is_leader(i64 a, i64 n, i64 q) except -1:
    cdef i64 x = (a * q) % n
    cdef i64 steps = 1
    while x != a:
        if x < a:
            return 0
        steps += 1
        if steps > MAX_ORBIT:
            raise OrbitTooLong(f"orbit of {a} mod {n} exceeds {MAX_ORBIT} steps")
        x = (x * q) % n
    return 1


def is_leader(i64 a, i64 n, i64 q):
    return bool(_is_leader(a % n, n, q))


def leader_table(i64 n, i64 q):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sizes = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen = np.zeros(n, dtype=np.uint8)
    cdef i64 a, x, size
    for a in range(n):
        if seen[a]:
            continue
        x = a
        size = 0
        while True:
            seen[x] = 1
            size += 1
            x = (x * q) % n
            if x == a:
                break
        sizes[a] = size
    return sizes


def union_count(i64 start, i64 count, i64 n, i64 q):
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen = np.zeros(n, dtype=np.uint8)
    cdef i64 a, b, x
    cdef i64 total = 0
    for b in range(start, start + count):
        a = b % n
        if seen[a]:
            continue
        x = a
        while not seen[x]:
            seen[x] = 1
            total += 1
            x = (x * q) % n
    return total


def next_leader(i64 start, i64 n, i64 q):
    cdef i64 a
    for a in range(start, n):
        if _is_leader(a, n, q):
            return a
    return -1
