"""The twisted polynomial ring R = D[t; σ] (t·a = σ(a)·t), right division,
right-invariance, and irreducibility tests for t^m - d.

D can be any associative ring object from this package (a CoeffAlgebra, an
associative PetitAlgebra, a TableAlgebra); σ is any callable automorphism of
D, or None for the identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import Budget, default_budget
from .errors import BudgetExceeded, OwnerMismatchError, ZeroDivisorError
from .fields import primitive_root_of_unity


class SkewPolyRing:
    def __init__(self, D, sigma=None, name: str | None = None):
        self.D = D
        self.sigma = sigma
        self.name = name or f"{D.name}[t;σ]"
        self._spow = {}

    def __repr__(self):
        return f"SkewPolyRing({self.name})"

    def sigma_pow(self, a, n: int):
        """σ^n(a), memoized."""
        if n == 0 or self.sigma is None:
            return a
        key = (n, a)
        try:
            return self._spow[key]
        except KeyError:
            r = self.sigma(self.sigma_pow(a, n - 1))
            self._spow[key] = r
            return r

    def poly(self, coeffs) -> "SkewPoly":
        return SkewPoly(self, tuple(coeffs))

    @property
    def one(self):
        return SkewPoly(self, (self.D.one,))

    @property
    def zero(self):
        return SkewPoly(self, ())

    @property
    def t(self):
        return SkewPoly(self, (self.D.zero, self.D.one))

    def monomial(self, a, n: int) -> "SkewPoly":
        return SkewPoly(self, (self.D.zero,) * n + (a,))

    def binomial(self, m: int, d) -> "SkewPoly":
        """t^m - d."""
        return SkewPoly(self, (-d,) + (self.D.zero,) * (m - 1) + (self.D.one,))


class SkewPoly:
    """Element of D[t;σ]: ascending coefficients, trailing zeros stripped."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewPolyRing, coeffs: tuple):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ring.D.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.D.zero

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, SkewPoly) or other.ring is not self.ring:
            raise OwnerMismatchError("polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        z = self.ring.D.zero
        return SkewPoly(self.ring, tuple(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=z)))

    def __sub__(self, other):
        self._check(other)
        z = self.ring.D.zero
        return SkewPoly(self.ring, tuple(a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=z)))

    def __neg__(self):
        return SkewPoly(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        return sp_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and other.ring is self.ring and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c!r}·t^{i}" for i, c in enumerate(self.coeffs) if c)


def sp_mul(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """Product in D[t;σ]: (a t^i)(b t^j) = a σ^i(b) t^(i+j)."""
    g._check(h)
    R = g.ring
    if not g.coeffs or not h.coeffs:
        return R.zero
    zero = R.D.zero
    out = [zero] * (len(g.coeffs) + len(h.coeffs) - 1)
    for i, a in enumerate(g.coeffs):
        if not a:
            continue
        for j, b in enumerate(h.coeffs):
            if b:
                out[i + j] = out[i + j] + a * R.sigma_pow(b, i)
    return SkewPoly(R, tuple(out))


def right_divmod(g: SkewPoly, f: SkewPoly):
    """Unique ``(q, r)`` with ``g = q·f + r`` and ``deg r < deg f``.

    Needs an invertible leading coefficient of f; otherwise ZeroDivisorError
    (with a zero-divisor witness) propagates from D."""
    g._check(f)
    if not f:
        raise ZeroDivisionError("right division by the zero polynomial")
    R = g.ring
    D = R.D
    m = f.degree
    lc = f.leading
    monic = lc == D.one
    r = list(g.coeffs)
    q = [D.zero] * max(len(r) - m, 0)
    inv_cache = {}
    while len(r) - 1 >= m:
        a = r[-1]
        k = len(r) - 1 - m
        if monic:
            b = a
        else:
            if k not in inv_cache:
                inv_cache[k] = D.inverse(R.sigma_pow(lc, k))
            b = a * inv_cache[k]
        q[k] = q[k] + b
        for i, fi in enumerate(f.coeffs):
            if fi:
                r[i + k] = r[i + k] - b * R.sigma_pow(fi, k)
        while r and not r[-1]:
            r.pop()
    return SkewPoly(R, tuple(q)), SkewPoly(R, tuple(r))


def mod_r(g: SkewPoly, f: SkewPoly) -> SkewPoly:
    return right_divmod(g, f)[1]


def is_right_invariant(f: SkewPoly):
    """``(True, None)`` if fR ⊆ Rf, else ``(False, (label, b))`` where
    ``f·b mod_r f != 0`` (b a basis element of D, or t)."""
    R = f.ring
    for b in R.D.basis():
        if mod_r(f * R.poly((b,)), f):
            return False, ("f·b", b)
    if mod_r(f * R.t, f):
        return False, ("f·t", R.t)
    return True, None


def binomial_constant(f: SkewPoly):
    """``d`` if ``f = t^m - d`` (monic binomial), else None."""
    D = f.ring.D
    if f.degree < 1 or f.leading != D.one:
        return None
    if any(f.coeffs[1:-1]):
        return None
    return -f.coeffs[0]


@dataclass
class CriterionResult:
    verdict: str  # "irreducible" | "reducible" | "inapplicable"
    method: str
    witness: object = None


def _norm_like(R: SkewPolyRing, z, m: int):
    """σ^(m-1)(z) ··· σ(z) z."""
    r = z
    for i in range(1, m):
        r = R.sigma_pow(z, i) * r
    return r


def _is_division_ring(D) -> bool:
    kind = getattr(D, "kind", None)
    if kind == "field":
        return True
    if kind == "cyclic":
        from .coeffalg import division_verdict

        return division_verdict(D).verdict == "division"
    return D.zero_divisor_scan() is None


def irreducible_criterion(f: SkewPoly, budget: Budget | None = None) -> CriterionResult:
    """Closed-form irreducibility tests for ``f = t^m - d`` over a finite
    division ring D: degree 2, 3, 4 and prime m with a primitive m-th root
    of unity in F0.  Anything else is "inapplicable"."""
    budget = budget or default_budget()
    d = binomial_constant(f)
    if d is None:
        raise ValueError(f"{f!r} is not a monic binomial t^m - d")
    R = f.ring
    D = R.D
    m = f.degree
    if not D.is_finite:
        return CriterionResult("inapplicable", "infinite coefficient ring")
    if D.size > budget.max_enum:
        return CriterionResult("inapplicable", "coefficient ring exceeds enumeration budget")
    if not _is_division_ring(D):
        return CriterionResult("inapplicable", "coefficient ring is not a division ring")
    if m == 1:
        return CriterionResult("irreducible", "degree-1")
    if m in (2, 3):
        for z in D.elements():
            if _norm_like(R, z, m) == d:
                return CriterionResult("reducible", f"degree-{m}", z)
        return CriterionResult("irreducible", f"degree-{m}")
    if m == 4:
        if D.size ** 2 > budget.max_pairs:
            return CriterionResult("inapplicable", "degree-4 pair sweep exceeds budget")
        s = R.sigma_pow
        elems = list(D.elements())
        zero = D.zero
        for x in elems:
            s2x = s(x, 2)
            s1x = s(x, 1)
            for y in elems:
                s1y = s(y, 1)
                s2y = s(y, 2)
                c1 = s2y * s1y * y + s2x * y + s2y * s1x
                if c1 == zero and s2x * x + s2y * s1y * x == d:
                    return CriterionResult("reducible", "degree-4", (x, y))
        return CriterionResult("irreducible", "degree-4")
    if _is_prime(m):
        F0 = getattr(D, "F0", None)
        if F0 is None:
            return CriterionResult("inapplicable", "no F0 available for the root-of-unity hypothesis")
        if primitive_root_of_unity(F0, m) is None:
            return CriterionResult("inapplicable", f"F0 has no primitive {m}th root of unity")
        for z in D.elements():
            if _norm_like(R, z, m) == d:
                return CriterionResult("reducible", "prime-m", z)
        return CriterionResult("irreducible", "prime-m")
    return CriterionResult("inapplicable", f"no closed-form criterion for m={m}")


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % k for k in range(2, int(n ** 0.5) + 1))


@dataclass
class ExhaustiveResult:
    irreducible: bool
    factor: tuple | None  # (g, h) with f = g·h, h monic
    candidates: int


def irreducible_exhaustive(f: SkewPoly, budget: Budget | None = None) -> ExhaustiveResult:
    """Search all monic right factors h of degree 1..m-1 of f.

    Over a division ring this decides irreducibility (any factorization can
    be normalized to a monic right factor).  Over rings with zero divisors it
    only rules out monic right factors."""
    budget = budget or default_budget()
    R = f.ring
    D = R.D
    m = f.degree
    if m < 1:
        raise ValueError("irreducibility is defined for non-constant polynomials")
    if m == 1:
        return ExhaustiveResult(True, None, 0)
    if not D.is_finite:
        raise BudgetExceeded("exhaustive factor search needs a finite coefficient ring")
    total = sum(D.size ** k for k in range(1, m))
    if total > budget.max_enum:
        raise BudgetExceeded(f"{total} monic candidates exceed max_enum={budget.max_enum}", witness=total)
    elems = list(D.elements())
    one = D.one
    checked = 0
    for k in range(1, m):
        for tail in itertools.product(elems, repeat=k):
            h = SkewPoly(R, tail + (one,))
            checked += 1
            q, r = right_divmod(f, h)
            if not r:
                return ExhaustiveResult(False, (q, h), checked)
    return ExhaustiveResult(True, None, checked)


def nonunit_leading_witness(f: SkewPoly):
    """Zero-divisor witness for a non-invertible leading coefficient, or None."""
    try:
        f.ring.D.inverse(f.leading)
    except ZeroDivisorError as exc:
        return exc.witness
    return None
