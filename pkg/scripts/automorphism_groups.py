"""Automorphism groups of (K/F, Frob^e, d) for every d outside F0.

Prints |Aut|, the number of id-extensions (|ker N|), whether the
inner-automorphism hypotheses hold and the cyclic-extension verdict.
F16 and F64 are off by default: their division scans take minutes."""

import argparse
import json
from collections import Counter

from nacx.autos import cyclic_extension_verdict, full_aut_group
from nacx.coeffalg import field_algebra
from nacx.fields import frobenius, make_finite_field
from nacx.petit import petit_algebra

CASES = [
    ("F4", 2, [1, 1, 1], 1),
    ("F8", 2, [1, 1, 0, 1], 1),
    ("F9", 3, [1, 0, 1], 1),
    ("F16", 2, [1, 1, 0, 0, 1], 1),
    ("F25", 5, [2, 0, 1], 1),
    ("F27", 3, [1, 2, 0, 1], 1),
    ("F64", 2, [1, 1, 0, 0, 0, 0, 1], 2),
]


def run(name, p, mod, e):
    K = make_finite_field(p, mod, name)
    D = field_algebra(K, frobenius(K, e))
    F0 = D.F0_in_D()
    tally = Counter()
    for x in K.elements():
        if not x or D(x) in F0:
            continue
        A = petit_algebra(D, D.m, D(x))
        res = full_aut_group(A)
        v = cyclic_extension_verdict(A)
        tally[(res.group.order, res.hypotheses["holds"], str(v.verdict))] += 1
    return [{"field": name, "m": D.m, "aut": a, "hypotheses": h, "cyclic_extension": c, "count": n}
            for (a, h, c), n in sorted(tally.items())]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", nargs="+", default=["F4", "F8", "F9", "F25", "F27"])
    ap.add_argument("--out")
    args = ap.parse_args()
    rows = []
    for name, p, mod, e in CASES:
        if name in args.fields:
            rows.extend(run(name, p, mod, e))
    print(f"{'field':6} {'m':>2} {'|Aut|':>5} {'hyp':>5} {'#d':>4}  cyclic extension")
    for r in rows:
        print(f"{r['field']:6} {r['m']:>2} {r['aut']:>5} {str(r['hypotheses']):>5} {r['count']:>4}  {r['cyclic_extension']}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
