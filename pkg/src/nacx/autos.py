"""Automorphisms H_{τ,k} of Petit algebras S_f, f = t^m - d:

    H_{τ,k}(Σ a_i t^i) = τ(a_0) + Σ_{i>=1} τ(a_i) (Π_{l<i} σ^l(k)) t^i

with the extension condition τ(d) = N_{F/F0}(k)·d, groups of such maps,
inner realizations G_c(x) = (c^-1 x) c through Hilbert 90, and the
cyclic-extension verdict (division + free of rank m + cyclic subgroup of
order m acting trivially on D).

Every map is verified by multiplicativity on all prime-field basis pairs
before it is marked verified; nothing is trusted from the formula alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .config import Budget, default_budget
from .errors import (
    DomainError,
    InternalInconsistency,
    NotAutomorphismError,
    UnavailableError,
)
from .fields import (
    hilbert90_solve,
    in_proper_subfield,
    ker_norm_enumerate,
    norm,
    primitive_root_of_unity,
)
from .petit import PetitAlgebra, is_division

MAX_ORDER = 1 << 12


class AutMap:
    """Candidate (then verified) map H_{τ,k} on a Petit algebra.

    ``tau`` is a callable automorphism of ``owner.D`` or None for the
    identity; ``k`` is an element of ``owner.D`` (constants are embedded).
    ``k_field`` keeps the field element k was made from, when there is one.
    """

    def __init__(self, owner: PetitAlgebra, tau, k, k_field=None, tau_label: str | None = None):
        D = owner.D
        if not D.owns(k):
            k_field = k if k_field is None else k_field
            k = D.embed_scalar(k)
        self.owner = owner
        self.tau = tau
        self.k = k
        self.k_field = k_field
        self.tau_label = tau_label or ("id" if tau is None else getattr(tau, "label", None) or "τ")
        self.verified = False
        self.inner_witness = None
        self._order = None
        R = owner.ring
        factors = [D.one]
        for i in range(1, owner.m):
            factors.append(factors[-1] * R.sigma_pow(k, i - 1))
        self._factors = factors
        self._M = None

    def __repr__(self):
        return f"H[{self.tau_label}, k={self.k!r}]"

    def __call__(self, x):
        A = self.owner
        A.check_owner(x)
        tau = self.tau
        coeffs = []
        for a, P in zip(x.coeffs, self._factors):
            ta = a if tau is None else tau(a)
            coeffs.append(ta * P)
        return A.elem(coeffs)

    def matrix(self):
        """Rows index output coordinates; column j is the image of basis j."""
        if self._M is None:
            A = self.owner
            self._M = linalg.transpose([list(A.to_vector(self(b))) for b in A.basis()])
        return self._M

    def key(self):
        return tuple(tuple(r) for r in self.matrix())

    def multiplicativity_witness(self):
        """First basis pair (x, y) with H(x∘y) != H(x)∘H(y), or None."""
        A = self.owner
        K = A.base
        M = self.matrix()
        T = A.structure_constants()
        cols = [tuple(c) for c in linalg.transpose(M)]
        B = A.basis()
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = tuple(linalg.matvec(M, T[i][j], K))
                rhs = A.mul_vectors(cols[i], cols[j])
                if lhs != rhs:
                    return (B[i], B[j])
        return None

    def verify(self):
        w = self.multiplicativity_witness()
        if w is not None:
            return ("multiplicativity", w)
        A = self.owner
        if linalg.rank(self.matrix(), A.base) < A.dim:
            return ("bijectivity", None)
        self.verified = True
        return None

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = matrix_order(self.matrix(), self.owner.base)
        return self._order

    def power_matrix(self, j: int):
        A = self.owner
        R = linalg.identity(A.dim, A.base)
        for _ in range(j):
            R = linalg.matmul(self.matrix(), R, A.base)
        return R

    def agrees_with(self, other) -> bool:
        """Pointwise equality on the basis."""
        return self.key() == other.key()

    def to_json(self):
        fmt = self.owner.base.format
        k = self.k_field
        kc = [fmt(a) for a in k.coords] if k is not None and hasattr(k, "coords") else None
        out = {"tau": self.tau_label, "k": kc, "verified": self.verified, "order": self.order}
        if self.inner_witness is not None:
            out["inner_witness"] = [fmt(a) for a in self.inner_witness.coords]
        return out


def matrix_order(M, K, limit: int = MAX_ORDER) -> int:
    n = len(M)
    I = [list(r) for r in linalg.identity(n, K)]
    cur = [list(r) for r in M]
    for j in range(1, limit + 1):
        if cur == I:
            return j
        cur = linalg.matmul(M, cur, K)
    raise InternalInconsistency(f"no finite order up to {limit}")


@dataclass
class AutGroup:
    owner: PetitAlgebra
    elements: list
    generators: list = field(default_factory=list)
    table: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity_index(self) -> int:
        A = self.owner
        I = tuple(tuple(r) for r in linalg.identity(A.dim, A.base))
        for i, h in enumerate(self.elements):
            if h.key() == I:
                return i
        raise InternalInconsistency("group has no identity")

    def element_of_order(self, m: int):
        for h in self.elements:
            if h.order == m:
                return h
        return None


def build_group(A: PetitAlgebra, elements) -> AutGroup:
    """Composition table (``table[i][j]`` = index of ``H_i ∘ H_j``), with
    closure, identity, inverses and associativity checked."""
    index = {}
    uniq = []
    for h in elements:
        if h.key() not in index:
            index[h.key()] = len(uniq)
            uniq.append(h)
    K = A.base
    n = len(uniq)
    table = [[None] * n for _ in range(n)]
    for i, hi in enumerate(uniq):
        for j, hj in enumerate(uniq):
            prod = tuple(tuple(r) for r in linalg.matmul(hi.matrix(), hj.matrix(), K))
            if prod not in index:
                raise InternalInconsistency("automorphism set not closed under composition", witness=(hi, hj))
            table[i][j] = index[prod]
    G = AutGroup(A, uniq, [], table)
    e = G.identity_index()
    for i in range(n):
        if e not in table[i]:
            raise InternalInconsistency("missing inverse", witness=uniq[i])
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise InternalInconsistency("composition table is not associative")
    G.generators = _generators(G)
    return G


def _generators(G: AutGroup):
    e = G.identity_index()
    gens = []
    reached = {e}
    for i in range(G.order):
        if i in reached:
            continue
        gens.append(i)
        frontier = list(reached)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = G.table[x][g]
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
    return [G.elements[i] for i in gens]


def _check_commutes(D, tau):
    sigma = getattr(D, "sigma", None)
    if tau is None or sigma is None:
        return
    for b in D.basis():
        if tau(sigma(b)) != sigma(tau(b)):
            raise NotAutomorphismError("τ and σ do not commute", witness=b)


def extension_condition(A: PetitAlgebra, tau, k) -> bool:
    """τ(d) = N_{F/F0}(k)·d, for k in F (a field element of D.K)."""
    D = A.D
    if A.d is None:
        raise DomainError("extension condition is stated for f = t^m - d")
    _check_commutes(D, tau)
    if k not in D.F:
        raise DomainError(f"{k!r} is not in F", witness=k)
    d = A.d
    td = d if tau is None else tau(d)
    return td == D.embed(norm(D.tower, k)) * d


def make_H(A: PetitAlgebra, tau, k, tau_label: str | None = None, check_condition: bool = True) -> AutMap:
    """Build H_{τ,k}, verify it on all basis pairs and compute its order."""
    if check_condition and not extension_condition(A, tau, k):
        raise DomainError(f"τ(d) != N(k)·d for k = {k!r}", witness=k)
    H = AutMap(A, tau, k, tau_label=tau_label)
    failure = H.verify()
    if failure is not None:
        raise InternalInconsistency(f"H_{{{H.tau_label},k}} fails {failure[0]}", witness=failure[1])
    H.order
    return H


def enumerate_id_extensions(A: PetitAlgebra) -> AutGroup:
    """One verified H_{id,k} per k in ker N_{F/F0}; the group table is
    checked against multiplication in the kernel."""
    D = A.D
    if not D.F.is_finite:
        raise UnavailableError("ker N enumeration needs a finite F")
    kernel = ker_norm_enumerate(D.tower)
    maps = [make_H(A, None, k) for k in kernel]
    G = build_group(A, maps)
    if G.order != len(kernel):
        raise InternalInconsistency("k -> H_{id,k} is not injective", witness=G.order)
    pos = {H.key(): i for i, H in enumerate(maps)}
    kpos = {k: i for i, k in enumerate(kernel)}
    for i, ki in enumerate(kernel):
        for j, kj in enumerate(kernel):
            gi = G.elements.index(maps[i])
            gj = G.elements.index(maps[j])
            if pos[G.elements[G.table[gi][gj]].key()] != kpos[ki * kj]:
                raise InternalInconsistency("composition does not match kernel multiplication", witness=(ki, kj))
    return G


def nontrivial_roots_of_unity(F0, m: int):
    """Elements x != 1 of F0 with x^m = 1."""
    amb = F0.ambient
    one = amb.one
    return [x for x in F0.nonzero_elements() if x != one and x ** m == one]


@dataclass
class FullAutResult:
    group: AutGroup
    classification: list
    hypotheses: dict
    extensions: dict  # j -> number of k with H_{σ^j,k} an automorphism
    restriction: str = "only τ = σ^j (commuting with σ) are swept"


def full_aut_group(A: PetitAlgebra) -> FullAutResult:
    """All verified H_{σ^j,k}, j < m, k in K^x, for D = K a finite field.

    For each j one preimage k0 of τ(d)/d under the norm is found by
    enumeration and the candidates are the coset k0·ker N.  When no
    nontrivial m-th root of unity lies in F0 and d lies in no proper subfield
    of K, the result must coincide with the id-extensions."""
    D = A.D
    if getattr(D, "kind", None) != "field":
        raise UnavailableError("full automorphism sweep is implemented for D a field")
    K = D.K
    if not K.is_finite:
        raise UnavailableError("full automorphism sweep needs a finite field")
    if A.d is None:
        raise DomainError("full automorphism sweep is stated for f = t^m - d")
    path = D.tower
    m = path.m
    d = A.d.coords[0]
    kernel = ker_norm_enumerate(path)
    nonzero = [x for x in K.elements() if x]
    maps = []
    extensions = {}
    for j in range(m):
        tau = None if j == 0 else D.sigma.power(j)
        label = "id" if j == 0 else (f"σ^{j}" if j > 1 else "σ")
        target = (d if tau is None else tau.kmap(d)) / d
        k0 = next((k for k in nonzero if norm(path, k) == target), None)
        found = []
        if k0 is not None:
            for k in kernel:
                found.append(make_H(A, tau, k0 * k, tau_label=label))
        extensions[j] = len(found)
        maps.extend(found)
    G = build_group(A, maps)
    classification = [
        {"tau": h.tau_label, "k": [K.base.format(a) for a in h.k_field.coords], "order": h.order,
         "form": "H_{id,k}" if h.tau is None else f"H_{{{h.tau_label},k}}"}
        for h in G.elements
    ]
    roots = nontrivial_roots_of_unity(path.lower, m)
    proper, sub = in_proper_subfield(K, d)
    hyp = {
        "no_nontrivial_mth_root_in_F0": not roots,
        "d_in_no_proper_subfield": not proper,
    }
    hyp["holds"] = hyp["no_nontrivial_mth_root_in_F0"] and hyp["d_in_no_proper_subfield"]
    if hyp["holds"]:
        ids = {h.key() for h in enumerate_id_extensions(A).elements}
        if {h.key() for h in G.elements} != ids:
            raise InternalInconsistency("hypotheses hold but Aut differs from the id-extensions")
    return FullAutResult(G, classification, hyp, extensions)


def inner_realize(H: AutMap, witness=None):
    """c in F^x with c^-1 σ(c) = k and G_c = H_{id,k} on every basis element."""
    if H.tau is not None:
        raise DomainError("inner realization is for τ = id")
    A = H.owner
    D = A.D
    k = H.k_field
    if k is None:
        raise DomainError("H has no field-element k")
    c = hilbert90_solve(D.tower, k, witness)
    cA = A.embed(c)
    cinv = A.embed(c.inverse())
    for b in A.basis():
        if (cinv * b) * cA != H(b):
            raise InternalInconsistency("G_c differs from H_{id,k}", witness=(c, b))
    H.inner_witness = c
    return c


@dataclass
class CyclicExtensionVerdict:
    verdict: object  # True | False | "unknown" | "not applicable (not division)"
    degree: int
    clauses: dict
    generator: AutMap | None = None
    group_order: int | None = None
    method: str = ""


def cyclic_extension_verdict(A: PetitAlgebra, m: int | None = None, budget: Budget | None = None) -> CyclicExtensionVerdict:
    """(a) A division, (b) free left D-module of rank m, (c) a cyclic subgroup
    of order m of automorphisms restricting to id on D.  For (c) the map
    H_{id,ω} with ω a primitive m-th root of unity in F0 is tried first, then
    the group of id-extensions is searched."""
    budget = budget or default_budget()
    m = A.m if m is None else m
    D = A.D
    clauses = {}
    div = is_division(A, budget)
    clauses["a_division"] = div.division
    if div.division is None:
        return CyclicExtensionVerdict("unknown", m, clauses, method=div.method)
    if div.division is False:
        return CyclicExtensionVerdict("not applicable (not division)", m, clauses, method=div.method)
    clauses["b_free_rank_m"] = A.m == m and A.dim == m * D.dim
    if not clauses["b_free_rank_m"]:
        return CyclicExtensionVerdict(False, m, clauses, method="rank")
    omega = primitive_root_of_unity(D.F0, m)
    if omega is not None:
        H = make_H(A, None, omega)
        if H.order != m:
            raise InternalInconsistency(f"H_{{id,ω}} has order {H.order}, expected {m}", witness=omega)
        clauses["c_cyclic_subgroup"] = True
        return CyclicExtensionVerdict(True, m, clauses, H, method="H_{id,ω}")
    G = enumerate_id_extensions(A)
    H = G.element_of_order(m)
    clauses["c_cyclic_subgroup"] = H is not None
    return CyclicExtensionVerdict(H is not None, m, clauses, H, G.order, method="id-extension search")
