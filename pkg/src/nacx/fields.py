"""Explicit field presentations over GF(p) or Q, automorphisms, norms and
kernels of norms, Hilbert 90, roots of unity and the subfield test.

A field is presented as ``base[x]/(modulus)`` with ``base`` a prime field or
Q; elements are coordinate tuples in the power basis ``1, x, ..., x^(n-1)``.
Subfields (fixed fields, centers) are ``Subfield`` objects: subspaces of an
ambient algebra, each able to produce its own presentation and embedding.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg
from .algebra import FiniteDimAlgebra, Subfield
from .errors import (
    DomainError,
    NacxError,
    NotAutomorphismError,
    OwnerMismatchError,
    ReducibleModulusError,
    UnavailableError,
)
from .scalars import BaseField, base_field

# Above this size no log/antilog tables are built.
LOG_TABLE_LIMIT = 1 << 16


# -- dense polynomials over a BaseField (ascending coefficient lists) --------

def _pstrip(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _pmul(a, b, K: BaseField):
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pstrip([K.reduce(c) for c in out])


def _pdivmod(a, b, K: BaseField):
    a = _pstrip(a)
    b = _pstrip(b)
    if not b:
        raise DomainError("polynomial division by zero")
    q = [K.zero] * max(len(a) - len(b) + 1, 0)
    inv = K.inv(b[-1])
    while len(a) >= len(b):
        c = K.mul(a[-1], inv)
        s = len(a) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            a[s + i] = K.sub(a[s + i], K.mul(c, y))
        a = _pstrip(a)
    return _pstrip(q), a


def _pgcdext(a, b, K: BaseField):
    """Return ``(g, s)`` with ``s*a = g (mod b)``, g monic gcd."""
    r0, r1 = _pstrip(a), _pstrip(b)
    s0, s1 = [K.one], []
    while r1:
        q, r = _pdivmod(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, [K.sub(x, y) for x, y in itertools.zip_longest(s0, _pmul(q, s1, K), fillvalue=K.zero)]
        s1 = _pstrip(s1)
    inv = K.inv(r0[-1])
    return [K.mul(c, inv) for c in r0], [K.mul(c, inv) for c in s0]


def _monic_polys(p: int, degree: int):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low[::-1]) + [1]


def find_factor(modulus, p: int):
    """A monic factor of degree <= deg/2 of ``modulus`` over GF(p), or None."""
    K = base_field(p)
    n = len(modulus) - 1
    for k in range(1, n // 2 + 1):
        for cand in _monic_polys(p, k):
            if not _pdivmod(modulus, cand, K)[1]:
                return tuple(cand)
    return None


def _rational_factor(modulus):
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(modulus)], x, domain="QQ")
    if poly.is_irreducible:
        return None
    factor = poly.factor_list()[1][0][0].monic()
    return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(factor.all_coeffs()))


# -- presentations -----------------------------------------------------------

class FieldElement:
    __slots__ = ("owner", "coords")

    def __init__(self, owner: "FieldPresentation", coords: tuple):
        self.owner = owner
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.owner is not self.owner:
                raise OwnerMismatchError(f"{other!r} is not in {self.owner.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.owner.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.owner.base
        return FieldElement(self.owner, tuple(K.add(a, b) for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        K = self.owner.base
        return FieldElement(self.owner, tuple(K.neg(a) for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.owner.base
        return FieldElement(self.owner, tuple(K.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.owner._mul(self, other)

    __rmul__ = __mul__

    def inverse(self):
        return self.owner.inverse(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.owner.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.owner is self.owner and other.coords == self.coords
        if isinstance(other, (int, Fraction)):
            return self == self.owner.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"{self.owner.name}{list(self.owner.base.format(c) for c in self.coords)}"


class FieldPresentation(FiniteDimAlgebra):
    """``base[x]/(modulus)`` with ``base`` = GF(p) (p > 0) or Q (p = 0).

    The modulus is monic, ascending, and checked irreducible at construction
    (exhaustive factor search over GF(p), sympy over Q).
    """

    def __init__(self, p: int, modulus, name: str | None = None, check: bool = True):
        self.base = base_field(p)
        K = self.base
        mod = tuple(K(c) for c in modulus)
        mod = tuple(_pstrip(mod))
        if len(mod) < 2:
            raise DomainError("modulus must have degree >= 1")
        if mod[-1] != K.one:
            raise DomainError(f"modulus {modulus} is not monic")
        self.modulus = mod
        self.degree = len(mod) - 1
        self.dim = self.degree
        self.name = name or (f"GF({p}^{self.degree})" if p else f"Q[x]/{list(modulus)}")
        if check and self.degree > 1:
            factor = find_factor(mod, p) if p else _rational_factor(mod)
            if factor is not None:
                raise ReducibleModulusError(
                    f"modulus {list(modulus)} of {self.name} is reducible", witness=factor
                )
        self._log = None
        self._exp = None

    def __repr__(self):
        return f"FieldPresentation({self.name})"

    # -- elements --------------------------------------------------------
    def to_vector(self, x):
        return x.coords

    def from_vector(self, v):
        return FieldElement(self, tuple(v))

    def __call__(self, coords):
        if isinstance(coords, FieldElement):
            if coords.owner is not self:
                raise OwnerMismatchError(f"{coords!r} not in {self.name}")
            return coords
        if isinstance(coords, (int, Fraction, str)):
            return self.scalar(coords)
        coords = list(coords)
        if len(coords) > self.degree:
            raise DomainError(f"{len(coords)} coordinates for degree-{self.degree} field {self.name}")
        coords += [0] * (self.degree - len(coords))
        return FieldElement(self, tuple(self.base(c) for c in coords))

    def scalar(self, c):
        K = self.base
        return FieldElement(self, (K(c),) + (K.zero,) * (self.degree - 1))

    @property
    def one(self):
        return self.scalar(1)

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def gen(self):
        if self.degree == 1:
            return self.scalar(self.base.neg(self.modulus[0]))
        return self([0, 1])

    # -- arithmetic ------------------------------------------------------
    def _mul_slow(self, a, b):
        K = self.base
        n = self.degree
        prod = [K.zero] * (2 * n - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        prod[i + j] += x * y
        mod = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = K.reduce(prod[k])
            if c:
                for i in range(n):
                    prod[k - n + i] -= c * mod[i]
        return FieldElement(self, tuple(K.reduce(c) for c in prod[:n]))

    def _tables(self):
        if self._log is None:
            prim = self._find_primitive()
            exp = []
            log = {}
            cur = self.one
            for i in range(self.size - 1):
                exp.append(cur.coords)
                log[cur.coords] = i
                cur = self._mul_slow(cur, prim)
            self._exp, self._log = exp, log
        return self._log, self._exp

    def _find_primitive(self):
        q1 = self.size - 1
        primes = [r for r in range(2, q1 + 1) if q1 % r == 0 and all(r % s for s in range(2, int(r ** 0.5) + 1))]
        for v in self.vectors():
            x = FieldElement(self, v)
            if not any(v):
                continue
            if all(self._pow_slow(x, q1 // r) != self.one for r in primes):
                return x
        raise NacxError(f"{self.name}: no primitive element (modulus not irreducible?)")

    def _pow_slow(self, x, n):
        r = self.one
        while n:
            if n & 1:
                r = self._mul_slow(r, x)
            x = self._mul_slow(x, x)
            n >>= 1
        return r

    def _mul(self, a, b):
        if self.is_finite and self.size <= LOG_TABLE_LIMIT:
            if not any(a.coords) or not any(b.coords):
                return self.zero
            log, exp = self._tables()
            return FieldElement(self, exp[(log[a.coords] + log[b.coords]) % (self.size - 1)])
        return self._mul_slow(a, b)

    def inverse(self, x):
        if not any(x.coords):
            raise DomainError(f"inverse of zero in {self.name}")
        if self.is_finite and self.size <= LOG_TABLE_LIMIT:
            log, exp = self._tables()
            return FieldElement(self, exp[-log[x.coords] % (self.size - 1)])
        g, s = _pgcdext(list(x.coords), list(self.modulus), self.base)
        if len(g) != 1:
            raise DomainError("element not invertible (modulus not irreducible?)")
        return self(s)

    def evaluate(self, poly, x):
        """Evaluate a base-field polynomial (ascending) at ``x``."""
        r = self.zero
        for c in reversed(poly):
            r = r * x + self.scalar(c)
        return r

    def element_order(self, x) -> int:
        log, exp = self._tables()
        from math import gcd

        return (self.size - 1) // gcd(log[x.coords], self.size - 1)


def make_finite_field(p: int, modulus, name: str | None = None) -> FieldPresentation:
    """GF(p)[x]/(modulus); raises DomainError for composite p and
    ReducibleModulusError (witness = a monic factor) for reducible moduli."""
    if p <= 0:
        raise DomainError("finite fields need a prime p > 0")
    return FieldPresentation(p, modulus, name)


def make_number_field(modulus, name: str | None = None) -> FieldPresentation:
    return FieldPresentation(0, modulus, name)


def prime_field(p: int, name: str | None = None) -> FieldPresentation:
    return FieldPresentation(p, (0, 1), name or (f"GF({p})" if p else "QQ"), check=False)


# -- maps --------------------------------------------------------------------

class FieldEmbedding:
    """Ring embedding ``src -> dst`` fixed on the prime field, given by the
    image of ``src``'s generator.  ``dst`` may be any algebra in which that
    image generates a commutative subfield."""

    def __init__(self, src: FieldPresentation, dst: FiniteDimAlgebra, image):
        self.src = src
        self.dst = dst
        self.image = image
        val = self._eval(src.modulus)
        if any(dst.to_vector(val)):
            raise NotAutomorphismError(f"image {image!r} is not a root of the modulus of {src.name}")

    def _eval(self, coeffs):
        dst = self.dst
        r = dst.zero
        for c in reversed(coeffs):
            r = r * self.image + dst.scale(dst.one, c)
        return r

    def __call__(self, x):
        if x.owner is not self.src:
            raise OwnerMismatchError(f"{x!r} is not in {self.src.name}")
        return self._eval(x.coords)


class FieldAutomorphism:
    """Automorphism of a field presentation fixing the prime field, given by
    the image of the generator.  Verified at construction: the image is a
    root of the modulus and the induced map is bijective."""

    def __init__(self, owner: FieldPresentation, generator_image, check: bool = True, label: str | None = None):
        self.owner = owner
        self.generator_image = owner(generator_image)
        self.label = label
        K = owner.base
        n = owner.degree
        cols = []
        cur = owner.one
        for _ in range(n):
            cols.append(list(cur.coords))
            cur = cur * self.generator_image
        self.matrix = linalg.transpose(cols)
        if check:
            if owner.evaluate(owner.modulus, self.generator_image):
                raise NotAutomorphismError(
                    f"{self.generator_image!r} is not a root of the modulus of {owner.name}",
                    witness=self.generator_image,
                )
            if linalg.rank(self.matrix, K) < n:
                raise NotAutomorphismError("generator image does not generate the field", witness=self.generator_image)
        self._cache = {}
        self._order = None

    def __call__(self, x):
        if x.owner is not self.owner:
            raise OwnerMismatchError(f"{x!r} is not in {self.owner.name}")
        try:
            return self._cache[x.coords]
        except KeyError:
            y = FieldElement(self.owner, linalg.matvec(self.matrix, x.coords, self.owner.base))
            if len(self._cache) < LOG_TABLE_LIMIT:
                self._cache[x.coords] = y
            return y

    def compose(self, other: "FieldAutomorphism") -> "FieldAutomorphism":
        """``self o other``."""
        return FieldAutomorphism(self.owner, self(other.generator_image), check=False)

    def power(self, j: int) -> "FieldAutomorphism":
        j %= self.order
        result = FieldAutomorphism(self.owner, self.owner.gen, check=False, label="id")
        for _ in range(j):
            result = self.compose(result)
        return result

    @property
    def order(self) -> int:
        if self._order is None:
            g = self.owner.gen
            cur = self.generator_image
            k = 1
            while cur != g:
                cur = self(cur)
                k += 1
                if k > self.owner.degree:
                    raise NacxError("automorphism order exceeds the field degree")
            self._order = k
        return self._order

    def is_identity(self) -> bool:
        return self.generator_image == self.owner.gen

    def __eq__(self, other):
        return (
            isinstance(other, FieldAutomorphism)
            and other.owner is self.owner
            and other.generator_image == self.generator_image
        )

    def __hash__(self):
        return hash(self.generator_image)

    def __repr__(self):
        return f"FieldAutomorphism({self.owner.name}: x -> {self.generator_image!r})"

    def to_json(self):
        return {"generator_image": [self.owner.base.format(c) for c in self.generator_image.coords]}


def identity_automorphism(K: FieldPresentation) -> FieldAutomorphism:
    return FieldAutomorphism(K, K.gen, check=False, label="id")


def frobenius(K: FieldPresentation, e: int = 1) -> FieldAutomorphism:
    """``x -> x^(p^e)`` on a finite field."""
    if not K.is_finite:
        raise UnavailableError(f"{K.name} is not finite; Frobenius undefined")
    return FieldAutomorphism(K, K.gen ** (K.p ** e), label=f"frob^{e}")


# -- subfields and towers ----------------------------------------------------

def fixed_subfield(sigma, within: Subfield, name: str | None = None) -> Subfield:
    """``Fix(sigma) ∩ within``, by solving ``sum a_i (sigma(u_i) - u_i) = 0``."""
    amb = within.ambient
    K = amb.base
    U = within.basis()
    diffs = [amb.to_vector(sigma(u) - u) for u in U]
    M = linalg.transpose(diffs) if diffs else []
    vecs = []
    for sol in linalg.nullspace(M, K, len(U)):
        v = amb.zero
        for a, u in zip(sol, U):
            if a:
                v = v + amb.scale(u, a)
        vecs.append(amb.to_vector(v))
    return Subfield(amb, vecs, name or f"Fix({getattr(sigma, 'label', None) or 'σ'})")


def fixed_field(sigma: FieldAutomorphism) -> Subfield:
    """Fix(sigma) as a subfield of the owner, with ``.presentation`` and
    ``.embedding`` for an explicit presentation and its inclusion."""
    K = sigma.owner
    return fixed_subfield(sigma, Subfield.whole(K), name=f"Fix({sigma.label or 'σ'})")


def restricted_order(sigma, sub: Subfield) -> int:
    """Order of ``sigma`` restricted to ``sub`` (which it must preserve)."""
    B = sub.basis()
    cur = list(B)
    for k in range(1, sub.degree + 2):
        cur = [sigma(x) for x in cur]
        if k == 1 and not all(x in sub for x in cur):
            raise NotAutomorphismError(f"σ does not preserve {sub.name}")
        if cur == B:
            return k
    raise NacxError(f"σ restricted to {sub.name} has order exceeding its degree")


class TowerPath:
    """The chain ``lower ⊆ upper ⊆ ambient`` with ``upper/lower`` cyclic of
    degree ``m`` generated by ``sigma`` (restricted to ``upper``).

    ``lower`` is computed as ``Fix(sigma) ∩ upper`` and the Galois condition
    ``[upper : lower] = m`` is verified at construction.
    """

    def __init__(self, sigma, upper: Subfield, name: str | None = None):
        self.sigma = sigma
        self.upper = upper
        self.ambient = upper.ambient
        self.m = restricted_order(sigma, upper)
        self.lower = fixed_subfield(sigma, upper, name=f"Fix(σ)∩{upper.name}")
        if self.lower.degree * self.m != upper.degree:
            raise NacxError(
                f"{upper.name}/{self.lower.name} is not cyclic Galois of degree {self.m}: "
                f"degrees {upper.degree} vs {self.lower.degree}"
            )
        self.name = name or f"{upper.name}/{self.lower.name}"

    @property
    def chain(self):
        return (self.lower, self.upper, self.ambient)

    def __repr__(self):
        return f"TowerPath({self.name}, m={self.m})"


def cyclic_tower(sigma: FieldAutomorphism, upper: Subfield | None = None) -> TowerPath:
    return TowerPath(sigma, upper or Subfield.whole(sigma.owner))


def norm(path: TowerPath, x):
    """``x·σ(x)···σ^(m-1)(x)``, an element of the lower field."""
    if x not in path.upper:
        raise DomainError(f"{x!r} is not in {path.upper.name}")
    result = x
    cur = x
    for _ in range(path.m - 1):
        cur = path.sigma(cur)
        result = result * cur
    return result


def ker_norm_enumerate(path: TowerPath):
    """All ``k`` in the upper field with ``N(k) = 1``, in deterministic order."""
    if not path.upper.is_finite:
        raise UnavailableError("kernel enumeration needs a finite field; use verify_kernel_witness")
    one = path.ambient.one
    return [k for k in path.upper.nonzero_elements() if norm(path, k) == one]


def verify_kernel_witness(path: TowerPath, k) -> bool:
    return norm(path, k) == path.ambient.one


def hilbert90_solve(path: TowerPath, k, witness=None):
    """``c`` in the upper field with ``c^(-1)·σ(c) = k`` (needs ``N(k) = 1``).

    Over a finite field ``c`` is found by enumeration; otherwise a supplied
    ``witness`` is verified and returned.
    """
    if norm(path, k) != path.ambient.one:
        raise DomainError(f"N({k!r}) != 1; no Hilbert 90 solution exists", witness=k)
    if witness is not None:
        if witness in path.upper and path.sigma(witness) == witness * k and any(path.ambient.to_vector(witness)):
            return witness
        raise NacxError("supplied witness does not satisfy c^-1 σ(c) = k", witness=witness)
    if not path.upper.is_finite:
        raise UnavailableError("Hilbert 90 enumeration needs a finite field; supply a witness")
    for c in path.upper.nonzero_elements():
        if path.sigma(c) == c * k:
            return c
    raise NacxError("no Hilbert 90 solution found despite N(k) = 1", witness=k)


def is_primitive_root(x, m: int, ambient=None) -> bool:
    amb = ambient or x.owner
    one = amb.one
    cur = one
    for j in range(1, m + 1):
        cur = cur * x
        if cur == one:
            return j == m
    return False


def _as_subfield(F) -> Subfield:
    return F if isinstance(F, Subfield) else Subfield.whole(F)


def primitive_root_of_unity(F, m: int):
    """First ``ω`` in ``F`` (deterministic order) of multiplicative order
    exactly ``m``; None when no such element exists."""
    F = _as_subfield(F)
    amb = F.ambient
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return amb.one
    if not F.is_finite:
        if F.degree == 1:
            return amb.scale(amb.one, -1) if m == 2 else None
        raise UnavailableError(f"root-of-unity search over the infinite field {F.name}")
    if (F.size - 1) % m:
        return None
    for x in F.nonzero_elements():
        if is_primitive_root(x, m, amb):
            return x
    return None


def subfield_generated(K: FieldPresentation, x, name=None) -> Subfield:
    deg = len(K.minimal_polynomial(x)) - 1
    return Subfield(K, [(x ** i).coords for i in range(deg)], name)


def in_proper_subfield(K: FieldPresentation, d):
    """``(True, smallest subfield containing d)`` if that subfield is proper,
    else ``(False, None)``.  Uses the degree of d's minimal polynomial."""
    if not K.is_finite:
        raise UnavailableError("subfield lattice computed only for finite fields")
    deg = len(K.minimal_polynomial(d)) - 1
    if deg < K.degree:
        return True, subfield_generated(K, d, name=f"GF({K.p}^{deg})")
    return False, None
