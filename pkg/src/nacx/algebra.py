"""Finite-dimensional algebras over a prime field (or Q), in coordinates.

Every concrete structure in the package (field presentations, coefficient
algebras, Petit algebras, algebras read from a multiplication table) is a
vector space over its prime field with a bilinear product.  This module holds
the machinery that only needs that much: structure constants, left/right
multiplication matrices, zero-divisor scans, inverses by solving a linear
system, minimal polynomials and subfields described as subspaces.
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import OwnerMismatchError, UnavailableError, ZeroDivisorError
from .linalg import Span
from .scalars import BaseField


class FiniteDimAlgebra:
    """Base class.  Subclasses define ``to_vector``, ``from_vector``, ``one``,
    the element product, and set ``base`` (a BaseField) and ``dim``."""

    base: BaseField
    dim: int
    name: str = "A"

    # -- coordinates -----------------------------------------------------
    def to_vector(self, x) -> tuple:
        raise NotImplementedError

    def from_vector(self, v):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_vector((self.base.zero,) * self.dim)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def is_finite(self) -> bool:
        return self.base.p > 0

    @property
    def size(self) -> int | None:
        return self.base.p ** self.dim if self.is_finite else None

    def owns(self, x) -> bool:
        return getattr(x, "owner", None) is self

    def check_owner(self, *xs):
        for x in xs:
            if not self.owns(x):
                raise OwnerMismatchError(f"{x!r} does not belong to {self.name}")

    def basis(self):
        try:
            return self._basis
        except AttributeError:
            K = self.base
            self._basis = [
                self.from_vector(tuple(K.one if i == j else K.zero for j in range(self.dim)))
                for i in range(self.dim)
            ]
            return self._basis

    def scale(self, x, c):
        c = self.base(c)
        return self.from_vector(tuple(self.base.mul(c, a) for a in self.to_vector(x)))

    # -- enumeration -----------------------------------------------------
    def vectors(self):
        """All coordinate vectors, first coordinate varying fastest."""
        if not self.is_finite:
            raise UnavailableError(f"{self.name} is infinite")
        for tup in itertools.product(range(self.p), repeat=self.dim):
            yield tup[::-1]

    def elements(self):
        for v in self.vectors():
            yield self.from_vector(v)

    def projective_vectors(self):
        """One representative of each line: highest nonzero coordinate equal to 1."""
        if not self.is_finite:
            raise UnavailableError(f"{self.name} is infinite")
        zeros = (0,) * self.dim
        for lead in range(self.dim):
            tail = zeros[lead + 1:]
            for low in itertools.product(range(self.p), repeat=lead):
                yield low[::-1] + (1,) + tail

    # -- structure constants and multiplication maps ----------------------
    def structure_constants(self):
        """``T[i][j]`` = coordinate vector of ``b_i * b_j``."""
        try:
            return self._table
        except AttributeError:
            B = self.basis()
            self._table = [[self.to_vector(bi * bj) for bj in B] for bi in B]
            return self._table

    def mul_vectors(self, u, v):
        """Product of two coordinate vectors via the structure constants."""
        T = self.structure_constants()
        K = self.base
        out = [K.zero] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            Ti = T[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                for r, t in enumerate(Ti[j]):
                    if t:
                        out[r] += c * t
        return tuple(K.reduce(a) for a in out)

    def left_matrix(self, x):
        """Matrix of ``y -> x*y`` (rows index output coordinates)."""
        return self._mult_matrix(self.to_vector(x), left=True)

    def right_matrix(self, x):
        """Matrix of ``y -> y*x``."""
        return self._mult_matrix(self.to_vector(x), left=False)

    def _mult_matrix(self, u, left: bool):
        T = self.structure_constants()
        K = self.base
        n = self.dim
        cols = []
        for j in range(n):
            acc = [K.zero] * n
            for i, ui in enumerate(u):
                if not ui:
                    continue
                vec = T[i][j] if left else T[j][i]
                for r, t in enumerate(vec):
                    if t:
                        acc[r] += ui * t
            cols.append([K.reduce(a) for a in acc])
        return linalg.transpose(cols)

    # -- properties ------------------------------------------------------
    def associator(self, x, y, z):
        return (x * y) * z - x * (y * z)

    def associativity_witness(self):
        """First basis triple with nonzero associator, or None."""
        B = self.basis()
        for x in B:
            for y in B:
                xy = x * y
                for z in B:
                    a = xy * z - x * (y * z)
                    if any(self.to_vector(a)):
                        return (x, y, z)
        return None

    def is_associative(self) -> bool:
        return self.associativity_witness() is None

    def is_commutative(self) -> bool:
        B = self.basis()
        return all(x * y == y * x for x in B for y in B)

    def left_annihilator(self, x):
        """Basis vectors of ``{y : x*y = 0}``."""
        return linalg.nullspace(self.left_matrix(x), self.base, self.dim)

    def right_annihilator(self, x):
        """Basis vectors of ``{y : y*x = 0}``."""
        return linalg.nullspace(self.right_matrix(x), self.base, self.dim)

    def zero_divisor_scan(self):
        """Exhaustive search for ``x*y = 0`` with ``x, y != 0``.

        Runs over one representative per line (scaling by the prime field does
        not change singularity of ``L_x``) in a fixed order and returns the
        first witness pair, or None when every ``L_x`` is injective.
        """
        for v in self.projective_vectors():
            ker = linalg.nullspace(self._mult_matrix(v, left=True), self.base, self.dim)
            if ker:
                return (self.from_vector(v), self.from_vector(ker[0]))
        return None

    def right_division_scan(self):
        """First nonzero ``a`` with ``R_a`` not bijective, or None."""
        for v in self.projective_vectors():
            if linalg.rank(self._mult_matrix(v, left=False), self.base) < self.dim:
                return self.from_vector(v)
        return None

    def inverse(self, x):
        """Two-sided inverse in an associative algebra, by solving ``x*y = 1``.

        Raises ZeroDivisorError carrying ``y != 0`` with ``x*y = 0`` when the
        left multiplication map is singular.
        """
        self.check_owner(x)
        L = self.left_matrix(x)
        sol = linalg.solve(L, self.to_vector(self.one), self.base)
        if sol is None:
            ker = linalg.nullspace(L, self.base, self.dim)
            w = self.from_vector(ker[0]) if ker else self.zero
            raise ZeroDivisorError(f"{x!r} is not a unit", witness=(x, w))
        y = self.from_vector(sol)
        if y * x != self.one:
            ker = linalg.nullspace(self.right_matrix(x), self.base, self.dim)
            raise ZeroDivisorError(f"{x!r} has no left inverse", witness=(self.from_vector(ker[0]), x))
        return y

    def power(self, x, n: int):
        """Left-normed power ``x*(x*(...))``; equals the usual power when associative."""
        r = self.one
        for _ in range(n):
            r = x * r
        return r

    def minimal_polynomial(self, x):
        """Monic minimal polynomial of ``x`` over the prime field (ascending).

        Assumes ``x`` generates an associative, commutative subalgebra, as is
        the case for elements of a subfield.
        """
        K = self.base
        powers = [self.to_vector(self.one)]
        cur = self.one
        while True:
            cur = cur * x
            v = self.to_vector(cur)
            sol = linalg.solve(linalg.transpose(powers), v, K)
            if sol is not None:
                return tuple(K.neg(c) for c in sol) + (K.one,)
            powers.append(v)

    def span(self, elements) -> Span:
        return Span([self.to_vector(e) for e in elements], self.base, self.dim)

    def center(self) -> Span:
        """``{x : x*b = b*x for all b}`` as a span (commutative center)."""
        rows = []
        for b in self.basis():
            L = self.right_matrix(b)
            R = self.left_matrix(b)
            K = self.base
            rows.extend([[K.sub(l, r) for l, r in zip(lr, rr)] for lr, rr in zip(L, R)])
        return Span(linalg.nullspace(rows, self.base, self.dim), self.base, self.dim)


class Subfield:
    """A subfield of a (commutative-on-it, associative) algebra, as a subspace.

    ``presentation`` and ``embedding`` give an explicit field presentation of
    the subfield over the prime field together with the inclusion map.
    """

    def __init__(self, ambient: FiniteDimAlgebra, vectors, name: str | None = None):
        self.ambient = ambient
        self.span = Span(list(vectors), ambient.base, ambient.dim)
        self.name = name or f"sub({ambient.name})"
        self._pres = None

    def __repr__(self):
        return f"Subfield({self.name}, degree={self.degree})"

    @classmethod
    def whole(cls, ambient, name=None):
        K = ambient.base
        vecs = [tuple(K.one if i == j else K.zero for j in range(ambient.dim)) for i in range(ambient.dim)]
        return cls(ambient, vecs, name or ambient.name)

    @classmethod
    def prime(cls, ambient):
        return cls(ambient, [ambient.to_vector(ambient.one)], f"GF({ambient.p})" if ambient.p else "QQ")

    @property
    def degree(self) -> int:
        """Degree over the prime field."""
        return self.span.dim

    @property
    def size(self) -> int | None:
        return self.ambient.p ** self.degree if self.ambient.is_finite else None

    @property
    def is_finite(self) -> bool:
        return self.ambient.is_finite

    def __contains__(self, x) -> bool:
        return self.ambient.to_vector(x) in self.span

    def __eq__(self, other):
        return isinstance(other, Subfield) and other.ambient is self.ambient and other.span == self.span

    def __le__(self, other):
        return self.span <= other.span

    def basis(self):
        return [self.ambient.from_vector(tuple(r)) for r in self.span.rows]

    def elements(self):
        """All elements, deterministic order (first basis coefficient fastest)."""
        if not self.is_finite:
            raise UnavailableError(f"{self.name} is infinite")
        p = self.ambient.p
        rows = self.span.rows
        n = self.ambient.dim
        for coeffs in itertools.product(range(p), repeat=len(rows)):
            coeffs = coeffs[::-1]
            v = [0] * n
            for c, row in zip(coeffs, rows):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, row)]
            yield self.ambient.from_vector(tuple(v))

    def nonzero_elements(self):
        for x in self.elements():
            if any(self.ambient.to_vector(x)):
                yield x

    def intersect(self, other: "Subfield", name=None) -> "Subfield":
        K = self.ambient.base
        n = self.ambient.dim
        # v = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a, b) = 0
        U = self.span.rows
        W = other.span.rows
        cols = [list(u) for u in U] + [[K.neg(c) for c in w] for w in W]
        M = linalg.transpose(cols) if cols else []
        vecs = []
        for sol in linalg.nullspace(M, K, len(cols)):
            a = sol[: len(U)]
            v = [K.zero] * n
            for ai, u in zip(a, U):
                if ai:
                    v = [K.add(x, K.mul(ai, y)) for x, y in zip(v, u)]
            vecs.append(tuple(v))
        return Subfield(self.ambient, vecs, name or f"{self.name}∩{other.name}")

    def primitive_element(self):
        """An element whose minimal polynomial has degree ``self.degree``."""
        amb = self.ambient
        if self.degree == 1:
            return amb.one
        if self.is_finite:
            for x in self.elements():
                if len(amb.minimal_polynomial(x)) - 1 == self.degree:
                    return x
        else:
            B = self.basis()
            cands = list(B)
            for i, j in itertools.combinations(range(len(B)), 2):
                for c in (1, 2, 3, -1):
                    cands.append(B[i] + amb.scale(B[j], c))
            for x in cands:
                if len(amb.minimal_polynomial(x)) - 1 == self.degree:
                    return x
        raise UnavailableError(f"no primitive element found for {self.name}")

    def _build_presentation(self):
        from .fields import FieldEmbedding, FieldPresentation

        x = self.primitive_element()
        modulus = self.ambient.minimal_polynomial(x) if self.degree > 1 else (self.ambient.base.zero, self.ambient.base.one)
        pres = FieldPresentation(self.ambient.p, modulus, name=self.name, check=False)
        image = x if self.degree > 1 else self.ambient.zero
        self._pres = (pres, FieldEmbedding(pres, self.ambient, image))

    @property
    def presentation(self):
        if self._pres is None:
            self._build_presentation()
        return self._pres[0]

    @property
    def embedding(self):
        if self._pres is None:
            self._build_presentation()
        return self._pres[1]
