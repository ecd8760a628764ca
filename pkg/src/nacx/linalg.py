"""Exact dense linear algebra over a BaseField.

Matrices are lists of rows; vectors are tuples or lists of reduced scalars.
Sizes in this package stay below ~100 columns, so plain Gaussian elimination
is adequate.
"""

from __future__ import annotations

from .scalars import BaseField


def rref(rows, K: BaseField, ncols: int | None = None):
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    p = K.p
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        row = M[r]
        iv = K.inv(row[c])
        if p:
            row = [v * iv % p for v in row]
        else:
            row = [v * iv for v in row]
        M[r] = row
        for i in range(nrows):
            if i != r:
                f = M[i][c]
                if f:
                    Mi = M[i]
                    if p:
                        M[i] = [(a - f * b) % p for a, b in zip(Mi, row)]
                    else:
                        M[i] = [a - f * b for a, b in zip(Mi, row)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows, K: BaseField) -> int:
    if not rows:
        return 0
    return len(rref(rows, K)[1])


def nullspace(M, K: BaseField, ncols: int | None = None):
    """Basis of ``{x : M x = 0}``; ``M`` is a list of rows."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(M, K, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [K.zero] * ncols
        x[fc] = K.one
        for row, pc in zip(R, pivots):
            x[pc] = K.neg(row[fc])
        basis.append(tuple(x))
    return basis


def solve(M, b, K: BaseField):
    """One solution of ``M x = b`` or None.  ``M`` is a list of rows."""
    ncols = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug, K, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [K.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def transpose(M):
    return [list(c) for c in zip(*M)]


def matvec(M, v, K: BaseField):
    p = K.p
    if p:
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in M)
    return tuple(sum((a * b for a, b in zip(row, v)), K.zero) for row in M)


def matmul(A, B, K: BaseField):
    Bt = transpose(B)
    return [list(matvec(Bt, row, K)) for row in A]


def identity(n: int, K: BaseField):
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]


class Span:
    """A subspace kept in reduced echelon form, for membership and reduction."""

    def __init__(self, vectors, K: BaseField, ncols: int):
        self.K = K
        self.ncols = ncols
        self.rows, self.pivots = rref(list(vectors), K, ncols) if vectors else ([], [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v):
        p = self.K.p
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            f = v[pc]
            if f:
                if p:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
                else:
                    v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v):
        """Coordinates of ``v`` w.r.t. the echelon rows (assumes membership)."""
        return tuple(v[pc] for pc in self.pivots)

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        return self.dim == other.dim and all(r in other for r in self.rows)

    def __le__(self, other):
        return all(r in other for r in self.rows)

    def __repr__(self):
        return f"Span(dim={self.dim}, ncols={self.ncols})"
