"""Recognizing S_f from a multiplication table.

Input: structure constants of a ring S over its prime field, a basis of a
subring D (as vectors of S) and an element t.  The recognizer checks

  (1) t^0, ..., t^(m-1) (t^(i+1) = t∘t^i) form a left D-basis of S,
  (2) t∘a = σ(a)∘t + δ(a) with σ(a), δ(a) in D,
  (3) [a∘t^i, b∘t^j, c∘t^k] = 0 for a, b, c in D, i+j < m, k < m,

then reads f off t^m = Σ d_i t^i.  The cyclic variant further asks for
δ = 0, (4) t^m = d in D^x and (5) σ of order m with the right fixed field.

Coordinates of D are taken relative to the supplied subring basis, so the
recovered σ, δ and d_i are in the table's own D-coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .algebra import FiniteDimAlgebra, Subfield
from .autos import matrix_order
from .config import Budget, default_budget
from .errors import (
    BudgetExceeded,
    InternalInconsistency,
    OwnerMismatchError,
    RecognitionRejected,
    ZeroDivisorError,
)
from .fields import primitive_root_of_unity
from .petit import PetitAlgebra, is_division
from .scalars import base_field
from .skewpoly import SkewPolyRing, irreducible_exhaustive


@dataclass
class RingTable:
    p: int  # 0 for Q
    dim: int
    constants: list  # constants[i][j] = coordinates of b_i∘b_j
    subring_basis: list
    t: tuple


class TableElement:
    __slots__ = ("owner", "vec")

    def __init__(self, owner, vec):
        self.owner = owner
        self.vec = tuple(vec)

    def _check(self, other):
        if not isinstance(other, TableElement) or other.owner is not self.owner:
            raise OwnerMismatchError(f"{other!r} is not in {self.owner.name}")

    def __add__(self, other):
        self._check(other)
        K = self.owner.base
        return TableElement(self.owner, (K.add(a, b) for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other):
        self._check(other)
        K = self.owner.base
        return TableElement(self.owner, (K.sub(a, b) for a, b in zip(self.vec, other.vec)))

    def __neg__(self):
        K = self.owner.base
        return TableElement(self.owner, (K.neg(a) for a in self.vec))

    def __mul__(self, other):
        self._check(other)
        return TableElement(self.owner, self.owner.mul_vectors(self.vec, other.vec))

    def __eq__(self, other):
        return isinstance(other, TableElement) and other.owner is self.owner and other.vec == self.vec

    def __hash__(self):
        return hash(self.vec)

    def __bool__(self):
        return any(self.vec)

    def __repr__(self):
        fmt = self.owner.base.format
        return f"[{', '.join(fmt(a) for a in self.vec)}]"


class TableAlgebra(FiniteDimAlgebra):
    """An algebra given only by its structure constants."""

    def __init__(self, p: int, constants, name: str = "S"):
        self.base = base_field(p)
        K = self.base
        self.dim = len(constants)
        self._table = [[tuple(K(c) for c in v) for v in row] for row in constants]
        self.name = name
        self._one = None

    def to_vector(self, x):
        return x.vec

    def from_vector(self, v):
        return TableElement(self, v)

    def __call__(self, v):
        K = self.base
        return TableElement(self, (K(a) for a in v))

    def embed_scalar(self, c):
        return self.scale(self.one, c)

    def structure_constants(self):
        return self._table

    @property
    def one(self):
        if self._one is None:
            self._one = self.find_one()
            if self._one is None:
                raise RecognitionRejected("unital", f"{self.name} has no two-sided identity")
        return self._one

    def find_one(self):
        """Solve e∘b_j = b_j = b_j∘e for all j; None if S is not unital."""
        T = self._table
        n = self.dim
        K = self.base
        rows, rhs = [], []
        for j in range(n):
            for r in range(n):
                target = K.one if r == j else K.zero
                rows.append([T[i][j][r] for i in range(n)])
                rhs.append(target)
                rows.append([T[j][i][r] for i in range(n)])
                rhs.append(target)
        sol = linalg.solve(rows, rhs, K)
        return None if sol is None else TableElement(self, sol)


class LinearMap:
    """A prime-field linear map of a TableAlgebra given by its matrix."""

    def __init__(self, owner: TableAlgebra, matrix, label: str = ""):
        self.owner = owner
        self.matrix = [list(r) for r in matrix]
        self.label = label

    def __call__(self, x):
        self.owner.check_owner(x)
        return TableElement(self.owner, linalg.matvec(self.matrix, x.vec, self.owner.base))

    def is_zero(self):
        return not any(any(r) for r in self.matrix)

    @property
    def order(self):
        return matrix_order(self.matrix, self.owner.base)

    def __repr__(self):
        return f"LinearMap({self.label or self.matrix})"


def table_from_algebra(A) -> RingTable:
    """Export a PetitAlgebra (D basis and t included) as a RingTable."""
    T = A.structure_constants()
    return RingTable(
        p=A.p,
        dim=A.dim,
        constants=[[list(v) for v in row] for row in T],
        subring_basis=[list(A.to_vector(b)) for b in A.D_basis()],
        t=tuple(A.to_vector(A.t)),
    )


def _coords(M, v, K):
    sol = linalg.solve(M, list(v), K)
    return None if sol is None else tuple(sol)


@dataclass
class SkewRecognition:
    S: TableAlgebra
    D: TableAlgebra
    m: int
    sigma: LinearMap
    delta: LinearMap
    d: list  # d_i with t^m = Σ d_i t^i
    f_coeffs: list  # coordinate vectors of f = t^m - Σ d_i t^i, ascending, monic
    basis_matrix: list  # columns b∘t^i, i outer, b inner


def _subring(S: TableAlgebra, table: RingTable) -> tuple[TableAlgebra, list]:
    K = S.base
    sub = [tuple(K(c) for c in v) for v in table.subring_basis]
    nD = len(sub)
    if nD == 0 or linalg.rank(sub, K) < nD:
        raise RecognitionRejected("subring", "subring basis is empty or dependent", witness=sub)
    Mt = linalg.transpose(sub)
    one = _coords(Mt, S.one.vec, K)
    if one is None:
        raise RecognitionRejected("subring", "the identity is not in the subring", witness=S.one)
    consts = []
    for u in sub:
        row = []
        for v in sub:
            c = _coords(Mt, S.mul_vectors(u, v), K)
            if c is None:
                raise RecognitionRejected("subring", "subring not closed under multiplication", witness=(u, v))
            row.append(c)
        consts.append(row)
    D = TableAlgebra(S.p, consts, name="D")
    D._one = TableElement(D, one)
    w = D.associativity_witness()
    if w is not None:
        raise RecognitionRejected("subring", "subring is not associative", witness=w)
    return D, sub


def recognize_skew(table: RingTable) -> SkewRecognition:
    S = TableAlgebra(table.p, table.constants, name="S")
    K = S.base
    N = S.dim
    S.one
    D, sub = _subring(S, table)
    nD = D.dim
    t = tuple(K(c) for c in table.t)
    # (1)
    if N % nD:
        raise RecognitionRejected(1, f"dim S = {N} is not a multiple of dim D = {nD}")
    m = N // nD
    if m < 2:
        raise RecognitionRejected(1, "S = D; t cannot extend a D-basis")
    powers = [S.one.vec]
    for _ in range(m):
        powers.append(S.mul_vectors(t, powers[-1]))
    cols = [S.mul_vectors(b, powers[i]) for i in range(m) for b in sub]
    M = linalg.transpose(cols)
    if linalg.rank(cols, K) < N:
        dep = linalg.nullspace(M, K, N)[0]
        raise RecognitionRejected(1, "the powers of t do not form a left D-basis", witness=dep)

    def blocks(v):
        c = _coords(M, v, K)
        return [c[i * nD:(i + 1) * nD] for i in range(m)]

    # (2)
    sig_cols, del_cols = [], []
    for j, b in enumerate(sub):
        bl = blocks(S.mul_vectors(t, b))
        for i in range(2, m):
            if any(bl[i]):
                raise RecognitionRejected(2, f"t∘b_{j} has a t^{i} component", witness=(j, i))
        sig_cols.append(bl[1])
        del_cols.append(bl[0])
    sigma = LinearMap(D, linalg.transpose(sig_cols), "σ")
    delta = LinearMap(D, linalg.transpose(del_cols), "δ")
    if linalg.rank(sigma.matrix, K) < nD:
        ker = linalg.nullspace(sigma.matrix, K, nD)[0]
        raise RecognitionRejected(2, "a' = 0 for some a != 0", witness=TableElement(D, ker))
    # (3)
    for i in range(m):
        for j in range(m - i):
            for k in range(m):
                for a in range(nD):
                    x = cols[i * nD + a]
                    for b in range(nD):
                        y = cols[j * nD + b]
                        xy = S.mul_vectors(x, y)
                        for c in range(nD):
                            z = cols[k * nD + c]
                            lhs = S.mul_vectors(xy, z)
                            rhs = S.mul_vectors(x, S.mul_vectors(y, z))
                            if lhs != rhs:
                                raise RecognitionRejected(
                                    3, "associator of a∘t^i, b∘t^j, c∘t^k is nonzero",
                                    witness=((a, i), (b, j), (c, k)))
    # f
    d = [TableElement(D, bl) for bl in blocks(powers[m])]
    f_coeffs = [tuple(K.neg(a) for a in x.vec) for x in d] + [D.one.vec]
    # σ automorphism, δ σ-derivation
    B = D.basis()
    if sigma(D.one) != D.one:
        raise RecognitionRejected("σ-automorphism", "σ(1) != 1")
    for x in B:
        for y in B:
            if sigma(x * y) != sigma(x) * sigma(y):
                raise RecognitionRejected("σ-automorphism", "σ is not multiplicative", witness=(x, y))
            if delta(x * y) != sigma(x) * delta(y) + delta(x) * y:
                raise RecognitionRejected("δ-derivation", "δ is not a σ-derivation", witness=(x, y))
    return SkewRecognition(S, D, m, sigma, delta, d, f_coeffs, M)


@dataclass
class CyclicRecognition:
    skew: SkewRecognition
    flavor: str
    petit: PetitAlgebra
    d: TableElement
    conditions: dict = field(default_factory=dict)
    omega: object = None
    associative: bool = False
    right_division: bool | None = None
    right_division_witness: object = None
    division: object = None
    verdict: str = ""


def _isomorphism_witness(rec: SkewRecognition, A: PetitAlgebra):
    """First basis pair where Σ a_i t^i -> Σ a_i∘t^i fails to be multiplicative."""
    S = rec.S
    K = S.base
    M = rec.basis_matrix
    cols = [tuple(c) for c in linalg.transpose(M)]
    T = A.structure_constants()
    for i in range(A.dim):
        for j in range(A.dim):
            if tuple(linalg.matvec(M, T[i][j], K)) != S.mul_vectors(cols[i], cols[j]):
                return (i, j)
    return None


def recognize_cyclic(table: RingTable, flavor: str = "field", budget: Budget | None = None) -> CyclicRecognition:
    """Recognize (K/F, σ, d) (flavor "field") or (D, σ, d) (flavor "csa")."""
    if flavor not in ("field", "csa"):
        raise ValueError(f"unknown flavor {flavor!r}")
    budget = budget or default_budget()
    rec = recognize_skew(table)
    D = rec.D
    K = D.base
    m = rec.m
    conditions = {"1": True, "2": None, "3": True}
    if not rec.delta.is_zero():
        w = next(b for b in D.basis() if rec.delta(b))
        raise RecognitionRejected(2, "t∘a = a'∘t + δ(a) with δ(a) != 0", witness=w)
    conditions["2"] = True
    if any(x for x in rec.d[1:]):
        i = next(i for i, x in enumerate(rec.d) if i and x)
        raise RecognitionRejected(4, f"t^m has a t^{i} component, so f is not a binomial", witness=rec.d)
    d = rec.d[0]
    try:
        D.inverse(d)
    except ZeroDivisorError as exc:
        raise RecognitionRejected(4, "t^m = d with d not invertible in D", witness=exc.witness) from None
    conditions["4"] = True
    zd = D.zero_divisor_scan()
    if zd is not None:
        raise RecognitionRejected("D", "the subring D is not a division ring", witness=zd)
    if flavor == "field" and not D.is_commutative():
        raise RecognitionRejected("D", "the subring is not commutative, so not a field")
    # (5)
    order = rec.sigma.order
    if order != m:
        raise RecognitionRejected(5, f"σ has order {order}, not m = {m}", witness=order)
    S = rec.S
    t = S(table.t)
    cols = []
    for b in D.basis():
        bS = S.from_vector(linalg.matvec(linalg.transpose([list(v) for v in _sub_vectors(table, K)]), b.vec, K))
        cols.append([K.sub(x, y) for x, y in zip((t * bS).vec, (bS * t).vec)])
    fixed = linalg.nullspace(linalg.transpose(cols), K, D.dim)
    Fix = Subfield(D, fixed, name="Fix")
    c5 = {"sigma_order": order, "fixed_degree": Fix.degree}
    if flavor == "field":
        if Fix.degree * m != D.dim:
            raise RecognitionRejected(5, f"[K : F] = {D.dim // max(Fix.degree, 1)} differs from m = {m}")
        ground = Fix
    else:
        Z = Subfield(D, D.center().rows, name="Z(D)")
        ground = Z.intersect(Fix, name="F0")
        c5["center_degree"] = Z.degree
    c5["ground_degree"] = ground.degree
    omega = primitive_root_of_unity(ground, m)
    c5["primitive_root_of_unity"] = omega is not None
    conditions["5"] = c5
    R = SkewPolyRing(D, rec.sigma)
    f = R.binomial(m, d)
    A = PetitAlgebra(R, f, name="S_f")
    w = _isomorphism_witness(rec, A)
    if w is not None:
        raise InternalInconsistency("conditions (1)-(4) hold but S is not isomorphic to S_f", witness=w)
    out = CyclicRecognition(rec, flavor, A, d, conditions, omega)
    out.associative = A.associativity_witness() is None
    if S.size is not None and S.size <= budget.max_scan:
        rw = S.right_division_scan()
        out.right_division = rw is None
        out.right_division_witness = rw
    if out.right_division:
        try:
            ex = irreducible_exhaustive(A.f, budget)
            if not ex.irreducible:
                raise InternalInconsistency("right division ring but f is reducible", witness=ex.factor)
        except BudgetExceeded:
            pass
        if omega is not None:
            out.verdict = f"nonassociative cyclic extension of D of degree {m}"
        else:
            out.verdict = "right division ring; no primitive m-th root of unity, so no cyclic-extension verdict"
    elif out.right_division is False:
        out.division = is_division(A, budget)
        out.verdict = "not a right division ring"
    else:
        out.verdict = "unknown (right-division scan over budget)"
    return out


def _sub_vectors(table: RingTable, K):
    return [tuple(K(c) for c in v) for v in table.subring_basis]
