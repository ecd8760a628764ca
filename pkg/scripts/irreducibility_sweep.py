"""Sweep t^m - d over small finite fields and tabulate division and
associativity verdicts, one row per (field, m)."""

import argparse
import json
import time

from nacx.coeffalg import field_algebra
from nacx.fields import frobenius, make_finite_field
from nacx.petit import is_division, petit_algebra
from nacx.skewpoly import is_right_invariant

FIELDS = {
    "F4": (2, [1, 1, 1], 1),
    "F8": (2, [1, 1, 0, 1], 1),
    "F9": (3, [1, 0, 1], 1),
    "F16": (2, [1, 1, 0, 0, 1], 1),
    "F25": (5, [2, 0, 1], 1),
    "F27": (3, [1, 2, 0, 1], 1),
    "F64": (2, [1, 1, 0, 0, 0, 0, 1], 2),
}


def sweep(name, m):
    p, mod, e = FIELDS[name]
    K = make_finite_field(p, mod, name)
    D = field_algebra(K, frobenius(K, e))
    row = {"field": name, "m": m, "sigma_order": D.m, "instances": 0, "division": 0,
           "associative": 0, "methods": {}}
    t0 = time.perf_counter()
    for x in K.elements():
        if not x:
            continue
        A = petit_algebra(D, m, D(x))
        res = is_division(A)
        row["instances"] += 1
        row["division"] += res.division is True
        row["associative"] += is_right_invariant(A.f)[0]
        row["methods"][res.method] = row["methods"].get(res.method, 0) + 1
    row["seconds"] = round(time.perf_counter() - t0, 3)
    return row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", nargs="+", default=["F4", "F8", "F9", "F25"])
    ap.add_argument("--degrees", nargs="+", type=int, default=[2, 3])
    ap.add_argument("--out")
    args = ap.parse_args()
    rows = [sweep(f, m) for f in args.fields for m in args.degrees]
    print(f"{'field':6} {'m':>2} {'ord σ':>5} {'#d':>4} {'div':>4} {'assoc':>5}  methods")
    for r in rows:
        meth = ", ".join(f"{k}:{v}" for k, v in sorted(r["methods"].items()))
        print(f"{r['field']:6} {r['m']:>2} {r['sigma_order']:>5} {r['instances']:>4} {r['division']:>4} "
              f"{r['associative']:>5}  {meth}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
