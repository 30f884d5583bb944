"""Time the compiled coset kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --q 3 --m 10
"""

import argparse
import time

from bchdim import _pykernels

try:
    from bchdim import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--m", type=int, default=10)
    ap.add_argument("--lam", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    n = (args.q**args.m - 1) // args.lam
    q = args.q
    cases = {
        "leader_table": lambda k: k.leader_table(n, q),
        "union_count": lambda k: k.union_count(1, n // 3, n, q),
        "next_leader": lambda k: k.next_leader(n // 2, n, q),
        "is_leader x 20000": lambda k: sum(k.is_leader(a, n, q) for a in range(1, min(n, 20001))),
    }
    print(f"n = {n}, q = {q}")
    print(f"{'kernel':<20}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, call in cases.items():
        tp, rp = best_of(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<20}{tp:>12.4f}{'n/a':>12}{'':>10}")
            continue
        tc, rc = best_of(lambda: call(_ckernels), args.repeat)
        same = (rp == rc).all() if hasattr(rp, "all") else rp == rc
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<20}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
