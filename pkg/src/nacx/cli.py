"""Batch command-line front end.  JSON in, JSON reports out.

Exit codes: 0 verdict computed, 1 input error, 2 verdict unknown.
Budgets come from NACX_MAX_ENUM / NACX_MAX_SCAN / NACX_MAX_PAIRS.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .autos import cyclic_extension_verdict, enumerate_id_extensions, full_aut_group, inner_realize
from .coeffalg import center_compute, division_verdict
from .config import WorkspaceConfig, default_budget
from .errors import (
    BudgetExceeded,
    DomainError,
    InternalInconsistency,
    NacxError,
    NotAutomorphismError,
    RecognitionRejected,
    ReducibleModulusError,
    UnavailableError,
)
from .fields import frobenius
from .petit import f0_compute, is_division, nucleus, right_nucleus_alt
from .recognize import recognize_cyclic, recognize_skew
from .skewpoly import is_right_invariant
from .tower import build_tower

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2


class Unknown(Exception):
    """Carries a report whose verdict could not be decided."""

    def __init__(self, report):
        super().__init__("unknown")
        self.report = report


def cmd_field_check(args, ws):
    obj = io.load_json(args.spec)
    obj = obj.get("field", obj) if isinstance(obj, dict) else obj
    p = io._get(obj, "p", "field", int)
    modulus = io._scalar_list(io._get(obj, "modulus", "field"), "field.modulus")
    try:
        K = io.parse_field(obj)
    except ReducibleModulusError as exc:
        return {"command": "field check", "field": False, "factor": io.jsonable(list(exc.witness) if exc.witness else None),
                "summary": f"modulus is reducible over GF({p})" if p else "modulus is reducible over Q"}
    ws.fields[K.name] = K
    rep = {"command": "field check", "field": True, "name": K.name, "p": p, "degree": K.degree,
           "modulus": [K.base.format(c) for c in K.modulus]}
    if K.is_finite:
        rep["size"] = K.size
        rep["frobenius_order"] = frobenius(K).order
    rep["summary"] = f"{K.name}: field of degree {K.degree}"
    return rep


def _algebra_header(A):
    D = A.D
    return {"algebra": A.name, "m": A.m, "dim_over_prime": A.dim, "dim_D": D.dim,
            "F0_degree": D.F0.degree, "d": io.jsonable(A.d)}


def cmd_alg_build(args, ws):
    A = io.parse_algebra(io.load_json(args.spec))
    ws.algebras[A.name] = A
    inv, w = is_right_invariant(A.f)
    assoc = A.associativity_witness()
    rep = {"command": "alg build", **_algebra_header(A)}
    rep["right_invariant"] = inv
    rep["right_invariance_witness"] = None if w is None else {"product": w[0], "element": io.jsonable(w[1])}
    rep["associative"] = assoc is None
    rep["associativity_witness"] = io.jsonable(assoc)
    rep["d_in_F0"] = A.d in A.D.F0_in_D()
    rep["F0_computed_degree"] = f0_compute(A).degree
    dv = division_verdict(A.D, seed=ws.seed)
    rep["D_division"] = {"verdict": dv.verdict, "method": dv.method, "witness": io.jsonable(dv.witness)}
    rep["summary"] = f"{A.name}: dim {A.dim}, associative={assoc is None}"
    return rep


def cmd_alg_division(args, ws):
    A = io.parse_algebra(io.load_json(args.spec))
    res = is_division(A, ws.budget)
    rep = {"command": "alg division", **_algebra_header(A), "division": res.division, "method": res.method,
           "methods": res.methods, "witness": io.jsonable(res.witness), "factor": io.jsonable(res.factor)}
    rep["summary"] = f"division: {res.division} ({res.method})"
    if res.division is None:
        raise Unknown(rep)
    return rep


def cmd_alg_nuclei(args, ws):
    A = io.parse_algebra(io.load_json(args.spec))
    Dspan = A.D_span()
    out = {}
    for which in ("left", "middle", "right"):
        N = nucleus(A, which)
        out[which] = {"dim": len(N), "equals_D": A.span(N) == Dspan}
    alt = right_nucleus_alt(A)
    out["right"]["matches_fg_in_Rf"] = A.span(alt) == A.span(nucleus(A, "right"))
    center = A.center()
    rep = {"command": "alg nuclei", **_algebra_header(A), "nuclei": out, "center_dim": center.dim,
           "D_center_degree": center_compute(A.D).degree,
           "nuc-l=nuc-m=D": out["left"]["equals_D"] and out["middle"]["equals_D"]}
    rep["summary"] = f"Nuc_l dim {out['left']['dim']}, Nuc_m dim {out['middle']['dim']}, Nuc_r dim {out['right']['dim']}"
    return rep


def cmd_aut_list(args, ws):
    A = io.parse_algebra(io.load_json(args.spec))
    G = enumerate_id_extensions(A)
    inner = []
    for H in G.elements:
        inner_realize(H)
        inner.append(H.to_json())
    rep = {"command": "aut list", **_algebra_header(A), "id_extension_count": G.order, "id_extensions": inner,
           "restriction": "only τ commuting with σ are considered"}
    if A.D.kind == "field":
        full = full_aut_group(A)
        rep["aut_count"] = full.group.order
        rep["classification"] = full.classification
        rep["extensions_per_sigma_power"] = {str(j): n for j, n in full.extensions.items()}
        rep["inner-automorphism-hypotheses"] = full.hypotheses
    rep["summary"] = f"{rep.get('aut_count', G.order)} automorphisms found"
    return rep


def cmd_aut_cyclic_extension(args, ws):
    A = io.parse_algebra(io.load_json(args.spec))
    v = cyclic_extension_verdict(A, args.degree, ws.budget)
    rep = {"command": "aut cyclic-extension", **_algebra_header(A), "verdict": v.verdict, "degree": v.degree,
           "cyclic-extension-clauses": v.clauses, "method": v.method, "group_order": v.group_order}
    if v.generator is not None:
        H = v.generator
        rep["generator"] = {"tau": H.tau_label, "k": io.scalar_label(H.k_field), "order": H.order}
        if A.D.F.is_finite:
            rep["inner_witness"] = io.jsonable(inner_realize(H))
    rep["summary"] = f"cyclic extension of degree {v.degree}: {v.verdict}"
    if v.verdict == "unknown":
        raise Unknown(rep)
    return rep


def cmd_tower_build(args, ws):
    spec = io.parse_tower(io.load_json(args.spec))
    res = build_tower(spec, ws.budget)
    conds = {}
    for key, c in res.report.conditions.items():
        conds[key] = {k: io.jsonable(v) for k, v in c.items()}
    rep = {"command": "tower build", "tower-conditions": conds, "notes": res.report.notes,
           "B_dim_over_prime": res.B.dim, "ranks": res.ranks, "H_order": res.order,
           "expected_order_mq": res.expected_order, "H^q=H_{id,k^q}": res.power_law,
           "division_hypothesis": "not met" if res.conclusion == "hypotheses not met" else "met",
           "conclusion": res.conclusion}
    rep["summary"] = f"H_(τ,k) of order {res.order}; {res.conclusion}"
    return rep


def cmd_recognize(args, ws):
    tb = io.parse_table(io.load_json(args.table))
    if args.flavor == "skew":
        r = recognize_skew(tb)
        rep = {"command": "recognize", "flavor": "skew", "m": r.m, "sigma": r.sigma.matrix,
               "delta_zero": r.delta.is_zero(), "delta": r.delta.matrix, "f": [list(c) for c in r.f_coeffs],
               "skew-recognition-conditions": {"1": True, "2": True, "3": True}}
        rep["summary"] = f"S ≅ S_f with m = {r.m}, δ = 0: {r.delta.is_zero()}"
        return rep
    r = recognize_cyclic(tb, args.flavor, ws.budget)
    label = f"{args.flavor}-recognition-conditions"
    rep = {"command": "recognize", "flavor": args.flavor, "m": r.skew.m, "sigma": r.skew.sigma.matrix,
           "delta_zero": True, "d": r.d, "f": [list(c) for c in r.skew.f_coeffs], label: r.conditions,
           "associative": r.associative, "right_division": r.right_division,
           "right_division_witness": r.right_division_witness, "verdict": r.verdict}
    if r.division is not None:
        rep["division"] = {"division": r.division.division, "witness": r.division.witness}
    rep["summary"] = r.verdict
    if r.right_division is None:
        raise Unknown(rep)
    return rep


def build_parser():
    ap = argparse.ArgumentParser(prog="nacx", description="Nonassociative cyclic algebra toolkit")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    ap.add_argument("--out", help="write the full JSON report here; a summary goes to stdout")
    sub = ap.add_subparsers(dest="group", required=True)

    f = sub.add_parser("field").add_subparsers(dest="action", required=True)
    p = f.add_parser("check")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_field_check)

    a = sub.add_parser("alg").add_subparsers(dest="action", required=True)
    for name, fn in (("build", cmd_alg_build), ("division", cmd_alg_division), ("nuclei", cmd_alg_nuclei)):
        p = a.add_parser(name)
        p.add_argument("--spec", required=True)
        p.set_defaults(func=fn)

    u = sub.add_parser("aut").add_subparsers(dest="action", required=True)
    p = u.add_parser("list")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_aut_list)
    p = u.add_parser("cyclic-extension")
    p.add_argument("--spec", required=True)
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_aut_cyclic_extension)

    t = sub.add_parser("tower").add_subparsers(dest="action", required=True)
    p = t.add_parser("build")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_tower_build)

    p = sub.add_parser("recognize")
    p.add_argument("--table", required=True)
    p.add_argument("--flavor", choices=("field", "csa", "skew"), default="field")
    p.set_defaults(func=cmd_recognize)
    return ap


def _emit(rep, args, stdout):
    text = io.dumps({k: v for k, v in rep.items() if k != "summary"} | {"summary": rep.get("summary")})
    if args.out:
        os.makedirs(os.path.dirname(os.path.abspath(args.out)), exist_ok=True)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(rep.get("summary", ""), file=stdout)
    else:
        stdout.write(text)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        budget = default_budget()
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    ws = WorkspaceConfig(output_dir=os.path.dirname(args.out) if args.out else ".", budget=budget, seed=args.seed)
    try:
        rep = args.func(args, ws)
    except Unknown as u:
        _emit(u.report, args, stdout)
        return EXIT_UNKNOWN
    except RecognitionRejected as exc:
        print(f"error: {exc}", file=stderr)
        rep = {"command": "recognize", "rejected": True, "condition": str(exc.condition), "message": str(exc),
               "witness": io.jsonable(exc.witness), "summary": str(exc)}
        _emit(rep, args, stdout)
        return EXIT_INPUT
    except (BudgetExceeded, UnavailableError) as exc:
        print(f"unknown: {exc}", file=stderr)
        return EXIT_UNKNOWN
    except (io.SchemaError, ReducibleModulusError, NotAutomorphismError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except InternalInconsistency:
        raise
    except NacxError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    _emit(rep, args, stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
