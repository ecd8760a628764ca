"""Build the F25 tower B over A = (F25/F5, Frob, a) and report the
conditions, the order of H_{τ,k} and the power law, for each k in F5^x
and a few choices of b."""

import argparse
import json
import os

from nacx import io
from nacx.errors import DomainError
from nacx.tower import build_tower, check_conditions, tower_spec

DEFAULT = os.path.join(os.path.dirname(__file__), "..", "data", "tower_f25.json")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--spec", default=DEFAULT)
    ap.add_argument("--out")
    args = ap.parse_args()
    base = io.parse_tower(io.load_json(args.spec))
    A = base.A
    K = A.D.K
    choices = {"x1·u": base.b, "x1": A.embed(K.gen), "1": A.one, "u": A.t}
    rows = []
    for label, b in choices.items():
        for kk in range(1, 5):
            spec = tower_spec(A, b, K(kk), base.m)
            rep = check_conditions(spec)
            row = {"b": label, "k": kk, "conditions": {i: rep.conditions[i]["holds"] for i in sorted(rep.conditions)}}
            try:
                res = build_tower(spec)
                row.update(order=res.order, expected=res.expected_order, power_law=res.power_law)
            except DomainError as exc:
                row["error"] = str(exc)
            rows.append(row)
    print(f"{'b':6} {'k':>2}  (1)-(5)               order  mq  H^q law")
    for r in rows:
        conds = " ".join(str(v)[0] for v in r["conditions"].values())
        tail = f"{r['order']:>5} {str(r['expected']):>3}  {r['power_law']}" if "order" in r else r["error"]
        print(f"{r['b']:6} {r['k']:>2}  {conds:20}  {tail}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2, default=str)


if __name__ == "__main__":
    main()
