"""Command-line interface: ``bchdim {dim,bose,coset,table,verify,lemmas}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import bose as B
from . import dimension as D
from . import nonnarrow as NN
from . import reference as R
from . import sweep as S
from .cyclotomic import coset
from .errors import BchError, UnsupportedRange
from .params import BchParams

TABLE_COLUMNS = ("q", "m", "lambda", "n", "delta", "dim", "bose", "merged_with")


def _params(args) -> BchParams:
    return BchParams(args.q, args.m, args.lam)


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record))
    else:
        print(" ".join(f"{k}={v}" for k, v in record.items()))


def _dimension(p: BchParams, delta: int, b: int, oracle: bool):
    try:
        if b == 1:
            return D.dimension(p, delta), "closed-form"
        return NN.nonnarrow_dimension(p, delta, b), "closed-form"
    except BchError:
        if not oracle:
            raise
    return R.dimension_oracle(p, delta, b), "oracle"


def _bose(p: BchParams, delta: int, b: int, oracle: bool):
    try:
        if b == 1:
            return B.bose_distance(p, delta), "closed-form"
        return NN.nonnarrow_bose(p, delta, b), "closed-form"
    except BchError:
        if not oracle:
            raise
    return R.bose_oracle(p, delta, b), "oracle"


def cmd_dim(args) -> int:
    p = _params(args)
    dim, method = _dimension(p, args.delta, args.b, args.oracle)
    rec = p.as_dict() | {"delta": args.delta, "b": args.b, "dim": dim, "method": method}
    _emit(rec, args.format)
    return 0


def cmd_bose(args) -> int:
    p = _params(args)
    d_b, method = _bose(p, args.delta, args.b, args.oracle)
    rec = p.as_dict() | {"delta": args.delta, "b": args.b, "bose": d_b, "method": method}
    _emit(rec, args.format)
    return 0


def cmd_coset(args) -> int:
    c = coset(args.a % args.n, args.n, args.q)
    rec = {"q": args.q, "n": args.n, "a": args.a, "leader": c.leader, "size": c.size,
           "members": list(c.members)}
    if args.format == "json":
        print(json.dumps(rec))
    else:
        print(f"leader={c.leader} size={c.size} members={','.join(map(str, c.members))}")
    return 0


def table_rows(p: BchParams, lo: int, hi: int, oracle: bool = False) -> list[dict]:
    def bose_or_none(delta):
        try:
            return _bose(p, delta, 1, oracle)[0]
        except UnsupportedRange:
            return None

    rows = []
    for delta in range(lo, hi + 1):
        dim = _dimension(p, delta, 1, oracle)[0]
        d_b = bose_or_none(delta)
        merged = ""
        if d_b is not None:
            first = delta
            while first > 2 and bose_or_none(first - 1) == d_b:
                first -= 1
            if d_b > first:
                merged = f"{first}-{d_b}"
        rows.append(p.as_dict() | {"delta": delta, "dim": dim, "bose": d_b, "merged_with": merged})
    return rows


def cmd_table(args) -> int:
    p = _params(args)
    if args.delta_min < 2 or args.delta_max < args.delta_min:
        raise UnsupportedRange(f"need 2 <= delta-min <= delta-max, got {args.delta_min}, {args.delta_max}")
    rows = table_rows(p, args.delta_min, args.delta_max, args.oracle)
    if args.format == "csv":
        w = csv.DictWriter(sys.stdout, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if v is None else v) for k, v in row.items()})
    else:
        for row in rows:
            print(json.dumps(row))
    return 0


VERIFY_CHECKS = {
    "formulas": S.check_formulas,
    "fast-paths": S.check_fast_paths,
    "assertions": S.check_assertions,
}


def _report(mismatches, label: str, started: float) -> int:
    for mm in mismatches:
        print(f"MISMATCH {mm.check} {mm.point} got={mm.got} want={mm.want}")
    print(f"{label}: {len(mismatches)} mismatches in {time.perf_counter() - started:.1f}s")
    return 2 if mismatches else 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    points = S.grid(args.q_max, args.m_min, args.m_max, args.max_modulus)
    if not points:
        raise UnsupportedRange("the requested grid is empty")
    names = list(VERIFY_CHECKS) if args.check == "all" else [args.check]
    found = []
    for name in names:
        pts = points if name != "assertions" else [pt for pt in points if pt[0] ** pt[1] - 1 <= 2**16]
        found += S.run(VERIFY_CHECKS[name], pts, args.parallel)
    return _report(found, f"verify {','.join(names)} over {len(points)} (q, m, lambda) points", started)


def cmd_lemmas(args) -> int:
    started = time.perf_counter()
    found = S.run(S.check_lemmas_for_q, S.lemma_points(args.grid), args.parallel)
    structure = [(q, m) for q in (2, 3, 4) for m in (4, 5, 6, 7)]
    if args.grid == "small":
        structure = [(q, m) for q in (2, 3) for m in (4, 5)]
    found += S.run(S.check_structure, structure, args.parallel)
    return _report(found, f"lemmas ({args.grid} grid)", started)


def _add_code_args(sp, delta=True):
    sp.add_argument("--q", type=int, required=True, help="field size (prime power)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", type=int, default=1, help="divisor of q-1; n = (q^m-1)/lambda")
    if delta:
        sp.add_argument("--delta", type=int, required=True, help="designed distance")
        sp.add_argument("--b", type=int, default=1, help="first exponent (1 = narrow sense)")
    sp.add_argument("--oracle", action="store_true", help="fall back to coset enumeration outside the proven range")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bchdim", description="Dimension and Bose distance of BCH codes of length (q^m-1)/lambda.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("dim", help="dimension of one code")
    _add_code_args(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("bose", help="Bose distance of one code")
    _add_code_args(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_bose)

    sp = sub.add_parser("coset", help="q-cyclotomic coset of a modulo n")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.set_defaults(func=cmd_coset)

    sp = sub.add_parser("table", help="dimension and Bose distance over a range of delta")
    _add_code_args(sp, delta=False)
    sp.add_argument("--delta-min", type=int, default=2)
    sp.add_argument("--delta-max", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="compare closed forms with coset enumeration over a grid")
    sp.add_argument("--q-max", type=int, default=9)
    sp.add_argument("--m-min", type=int, default=4)
    sp.add_argument("--m-max", type=int, default=8)
    sp.add_argument("--max-modulus", type=int, default=2**20, help="skip q^m-1 above this")
    sp.add_argument("--check", choices=(*VERIFY_CHECKS, "all"), default="formulas")
    sp.add_argument("--parallel", type=int, default=None, help="worker processes (BCH_PARALLEL overrides)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("lemmas", help="check the floor-sum identities and digit classes")
    sp.add_argument("--grid", choices=("small", "full"), default="small")
    sp.add_argument("--parallel", type=int, default=None)
    sp.set_defaults(func=cmd_lemmas)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
