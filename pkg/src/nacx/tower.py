"""Towers B = A[t;ρ]/A[t;ρ](t^m - b) over an associative generalized cyclic
algebra A = (D, σ, a), a in F0, carrying H_{τ,k} with τ = H_{id,ω}.

Conditions checked:
  (1) τρ = ρτ,
  (2) τ(b) = k ρ(k) ··· ρ^(m-1)(k) b,
  (3) k^q is a primitive m-th root of unity,
  (4) t^m - b irreducible in A[t;ρ],
  (5) B finite-dimensional over F0 ∩ Fix(ρ) (the other two alternatives are
      only reported).
(1) and (2) make H_{τ,k} an automorphism; (3) gives it order mq.  Over finite
fields A is never division when qn > 1, so the division-dependent
conclusion is always labelled "hypotheses not met" there.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .autos import AutMap, make_H
from .config import Budget, default_budget
from .errors import BudgetExceeded, DomainError, InternalInconsistency
from .fields import is_primitive_root, primitive_root_of_unity
from .petit import PetitAlgebra, is_division, petit_algebra
from .skewpoly import irreducible_exhaustive

RELAXATION = ("division of A is not required here: over finite fields A = (D,σ,a) with a in F0 "
              "is split whenever qn > 1, so only the structural content is checked")


@dataclass
class TowerSpec:
    A: PetitAlgebra
    tau: AutMap
    rho: object  # automorphism of A, None for the identity
    b: object  # element of A
    k: object  # element of F0 (a field element of D.K)
    m: int
    q: int
    omega: object = None


def tower_spec(A: PetitAlgebra, b, k, m: int, rho=None) -> TowerSpec:
    """Fill in q = order of σ on F, ω and τ = H_{id,ω} for an associative A."""
    D = A.D
    if A.d is None or A.d not in D.F0_in_D():
        raise DomainError("A must be (D,σ,a) with a in F0", witness=A.d)
    q = D.m
    if A.m != q:
        raise DomainError(f"A has degree {A.m}, but σ has order {q} on F")
    omega = primitive_root_of_unity(D.F0, q)
    if omega is None:
        raise DomainError(f"F0 has no primitive {q}th root of unity")
    tau = make_H(A, None, omega)
    if not A.owns(b):
        b = A.embed(b)
    return TowerSpec(A, tau, rho, b, D.K(k), m, q, omega)


def _k_in_A(spec: TowerSpec):
    return spec.A.embed(spec.k)


def _rho(spec: TowerSpec, x):
    return x if spec.rho is None else spec.rho(x)


@dataclass
class ConditionReport:
    conditions: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def ok(self, i: int) -> bool:
        return self.conditions.get(str(i), {}).get("holds") is True


def check_conditions(spec: TowerSpec, budget: Budget | None = None) -> ConditionReport:
    budget = budget or default_budget()
    A = spec.A
    D = A.D
    rep = ConditionReport()
    # (1)
    w1 = None
    for x in A.basis():
        if spec.tau(_rho(spec, x)) != _rho(spec, spec.tau(x)):
            w1 = x
            break
    rep.conditions["1"] = {"label": "τ commutes with ρ", "holds": w1 is None, "witness": w1}
    # (2)
    kA = _k_in_A(spec)
    prod = kA
    cur = kA
    for _ in range(spec.m - 1):
        cur = _rho(spec, cur)
        prod = prod * cur
    lhs = spec.tau(spec.b)
    rhs = prod * spec.b
    rep.conditions["2"] = {"label": "τ(b) = k ρ(k)···ρ^(m-1)(k) b", "holds": lhs == rhs,
                           "witness": None if lhs == rhs else (lhs, rhs)}
    # (3)
    kq = spec.k ** spec.q
    rep.conditions["3"] = {"label": "k^q is a primitive m-th root of unity",
                           "holds": spec.k in D.F0 and is_primitive_root(kq, spec.m, D.K)}
    # (4)
    B = _build_B(spec)
    try:
        ex = irreducible_exhaustive(B.f, budget)
        holds = ex.irreducible
        note = None
        if A.zero_divisor_scan() is not None:
            note = "A has zero divisors: only monic right factors were ruled out" if holds else None
        rep.conditions["4"] = {"label": "t^m - b irreducible in A[t;ρ]", "holds": holds,
                               "witness": ex.factor, "method": "monic right-factor search", "note": note}
    except BudgetExceeded as exc:
        rep.conditions["4"] = {"label": "t^m - b irreducible in A[t;ρ]", "holds": "unknown", "witness": str(exc)}
    # (5)
    fixed = [c for c in D.F0.elements() if _rho(spec, A.embed(c)) == A.embed(c)]
    size = len(fixed)
    deg = _log(size, D.p)
    rep.conditions["5"] = {
        "label": "B finite-dimensional over F0 ∩ Fix(ρ)",
        "holds": True,
        "dimension": B.dim // deg,
        "not_evaluated": ["B associative alternative", "right-nucleus alternative"],
    }
    rep.notes.append(RELAXATION)
    return rep


def _log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def _build_B(spec: TowerSpec) -> PetitAlgebra:
    try:
        return spec._B
    except AttributeError:
        B = petit_algebra(spec.A, spec.m, spec.b, sigma=spec.rho, name=f"B(m={spec.m})")
        spec._B = B
        return B


@dataclass
class TowerResult:
    B: PetitAlgebra
    H: AutMap
    order: int
    expected_order: int | None
    power_law: bool  # H^q = H_{id,k^q} pointwise
    report: ConditionReport
    ranks: dict
    conclusion: str


def build_tower(spec: TowerSpec, budget: Budget | None = None) -> TowerResult:
    budget = budget or default_budget()
    rep = check_conditions(spec, budget)
    for i in (1, 2):
        if not rep.ok(i):
            raise DomainError(f"condition ({i}) failed: {rep.conditions[str(i)]['label']}",
                              witness=rep.conditions[str(i)].get("witness"))
    A = spec.A
    B = _build_B(spec)
    H = AutMap(B, spec.tau, _k_in_A(spec), k_field=spec.k, tau_label="H_{id,ω}")
    failure = H.verify()
    if failure is not None:
        raise InternalInconsistency(f"H_{{τ,k}} fails {failure[0]} although (1) and (2) hold", witness=failure[1])
    Hq = AutMap(B, None, A.embed(spec.k ** spec.q), k_field=spec.k ** spec.q)
    power_law = H.power_matrix(spec.q) == [list(r) for r in Hq.matrix()]
    expected = spec.m * spec.q if rep.ok(3) else None
    if expected is not None and H.order != expected:
        raise InternalInconsistency(f"H_{{τ,k}} has order {H.order}, expected {expected}")
    ranks = {
        "B_over_A": B.dim // A.dim,
        "B_over_D": B.dim // A.D.dim,
        "free_left_A_rank_m": B.dim == spec.m * A.dim,
        "free_left_D_rank_mq": B.dim == spec.m * spec.q * A.D.dim,
    }
    div = is_division(A, budget)
    if rep.ok(4) and div.division is True:
        conclusion = f"nonassociative cyclic extension of D of degree {spec.m * spec.q}"
    else:
        conclusion = "hypotheses not met"
    return TowerResult(B, H, H.order, expected, power_law, rep, ranks, conclusion)
