"""Exact dense linear algebra over a field.

Matrices are lists of rows; a vector is a list of field elements.  Row
reduction over prime fields is vectorized with numpy int64 arithmetic
(values stay reduced mod p, so this is exact); over the rationals a generic
Fraction-based elimination is used.
"""

from __future__ import annotations

import numpy as np

__all__ = ["rref", "kernel", "solve_affine", "mat_mul", "Subspace", "eye"]


def eye(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def _rref_np(rows, p, transform):
    M = np.array(rows, dtype=np.int64) % p
    nrows, ncols = M.shape
    T = np.eye(nrows, dtype=np.int64) if transform else None
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
            if transform:
                T[[r, i]] = T[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        if transform:
            T[r] = (T[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            M[mask] = (M[mask] - np.outer(col[mask], M[r])) % p
            if transform:
                T[mask] = (T[mask] - np.outer(col[mask], T[r])) % p
        pivots.append(c)
        r += 1
    basis = [[int(v) for v in M[k]] for k in range(r)]
    if transform:
        tmat = [[int(v) for v in T[k]] for k in range(r)]
        return basis, pivots, tmat
    return basis, pivots, None


def _rref_generic(rows, field, transform):
    M = [list(row) for row in rows]
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    T = eye(field, nrows) if transform else None
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if M[i][c] != field.zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            M[r], M[pivot_row] = M[pivot_row], M[r]
            if transform:
                T[r], T[pivot_row] = T[pivot_row], T[r]
        inv = field.inv(M[r][c])
        M[r] = [field.mul(v, inv) for v in M[r]]
        if transform:
            T[r] = [field.mul(v, inv) for v in T[r]]
        for i in range(nrows):
            if i != r and M[i][c] != field.zero:
                factor = M[i][c]
                M[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(M[i], M[r])]
                if transform:
                    T[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
    if transform:
        return M[:r], pivots, T[:r]
    return M[:r], pivots, None


def rref(rows, field, transform=False):
    """Reduced row echelon form.

    Returns (basis_rows, pivot_columns) or, with transform=True,
    (basis_rows, pivot_columns, T) where basis = T applied to the input rows.
    Zero rows are dropped.  Deterministic for a fixed row order.
    """
    rows = [row for row in rows]
    if not rows:
        return ([], [], []) if transform else ([], [])
    if field.is_prime:
        basis, pivots, tmat = _rref_np(rows, field.p, transform)
    else:
        basis, pivots, tmat = _rref_generic(rows, field, transform)
    if transform:
        return basis, pivots, tmat
    return basis, pivots


def mat_mul(A, B, field):
    """Product of row-major matrices A (m x k) and B (k x n)."""
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    if field.is_prime:
        p = field.p
        out = (np.array(A, dtype=np.int64) @ np.array(B, dtype=np.int64)) % p
        return [[int(v) for v in row] for row in out]
    n = len(B[0])
    out = []
    for row in A:
        acc = [field.zero] * n
        for a, brow in zip(row, B):
            if a != field.zero:
                acc = [field.add(x, field.mul(a, b)) for x, b in zip(acc, brow)]
        out.append(acc)
    return out


def kernel(rows, field, ncols=None):
    """Basis of the null space {x : A x = 0} for A given by rows."""
    if not rows:
        return [] if ncols is None else [
            [field.one if i == j else field.zero for j in range(ncols)]
            for i in range(ncols)
        ]
    ncols = len(rows[0])
    basis, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for row, p in zip(basis, pivots):
            v[p] = field.neg(row[fcol])
        out.append(v)
    return out


def solve_affine(A, b, field):
    """Solve A x = b exactly.

    Returns (particular, kernel_basis) on success, None if inconsistent.
    Raises ValueError on dimension mismatch.
    """
    m = len(A)
    if len(b) != m:
        raise ValueError("right-hand side length does not match row count")
    if m == 0:
        return [], []
    ncols = len(A[0])
    for row in A:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    basis, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    particular = [field.zero] * ncols
    for row, p in zip(basis, pivots):
        particular[p] = row[ncols]
    return particular, kernel([row[:ncols] for row in basis], field, ncols=ncols)


class Subspace:
    """A subspace of k^ambient held as a reduced-echelon basis."""

    def __init__(self, field, ambient, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        vectors = [v for v in vectors if any(x != field.zero for x in v)]
        if not vectors:
            return cls(field, ambient, [], [])
        basis, pivots = rref(vectors, field)
        return cls(field, ambient, basis, pivots)

    @classmethod
    def zero_space(cls, field, ambient):
        return cls(field, ambient, [], [])

    @classmethod
    def full_space(cls, field, ambient):
        return cls(field, ambient, eye(field, ambient), list(range(ambient)))

    @property
    def dim(self):
        return len(self.basis)

    def residual(self, v):
        """v minus its projection onto the basis (zero iff v is contained)."""
        f = self.field
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != f.zero:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        f = self.field
        return all(x == f.zero for x in self.residual(v))

    def coords(self, v):
        """Coordinates of v in the echelon basis, or None if not contained."""
        if not self.contains(v):
            return None
        return [v[p] for p in self.pivots]

    def complement_functionals(self):
        """Rows of a matrix E with kernel exactly this subspace."""
        f = self.field
        pivot_set = set(self.pivots)
        out = []
        for q in range(self.ambient):
            if q in pivot_set:
                continue
            lam = [f.zero] * self.ambient
            lam[q] = f.one
            for row, p in zip(self.basis, self.pivots):
                lam[p] = f.neg(row[q])
            out.append(lam)
        return out

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, tuple(self.pivots)))

    def is_subspace_of(self, other) -> bool:
        return all(other.contains(row) for row in self.basis)

    def __add__(self, other):
        return Subspace.from_vectors(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other):
        """Zassenhaus intersection."""
        f = self.field
        amb = self.ambient
        if amb != other.ambient:
            raise ValueError("ambient dimension mismatch")
        zero = [f.zero] * amb
        stacked = [row + row for row in self.basis] + [row + zero for row in other.basis]
        if not stacked:
            return Subspace.zero_space(f, amb)
        basis, pivots = rref(stacked, f)
        inter = [row[amb:] for row, p in zip(basis, pivots) if p >= amb]
        return Subspace.from_vectors(f, amb, inter)

    def preimage(self, A):
        """{x : A x in self} for A given as ambient x n rows."""
        n = len(A[0]) if A else 0
        E = self.complement_functionals()
        if not E:
            return Subspace.full_space(self.field, n)
        EA = mat_mul(E, A, self.field)
        return Subspace.from_vectors(self.field, n, kernel(EA, self.field, ncols=n))
