"""The truncated hypersurface algebra R_N = k[x_1..x_v]/((f) + m^N).

All ideal and annihilator questions are decided inside these
finite-dimensional algebras by exact linear algebra.  The basis is the set
of standard monomials of degree < N: row-reducing the relation vectors
{u*f truncated below degree N} with pivots on the *largest* monomial
(graded-lex) leaves exactly the hand-enumerable small monomials standard.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .linalg import rref
from .poly import Polynomial, grlex_key, mono_deg, mono_mul, monomials_below, parse_poly


class SpecError(ValueError):
    """Invalid ring specification."""


@dataclass(frozen=True)
class RingSpec:
    """A hypersurface ring k[[x_1..x_v]]/(f)."""

    variables: tuple
    f: Polynomial
    field: object

    def __post_init__(self):
        if self.f.is_zero:
            raise SpecError("hypersurface equation must be nonzero")
        if self.f.nvars != len(self.variables):
            raise SpecError("equation arity does not match the variable list")
        if self.f.min_degree() < 2:
            raise SpecError("hypersurface equation must lie in the square of the maximal ideal")
        if self.f.field != self.field:
            raise SpecError("equation coefficients are not over the declared field")

    @property
    def nvars(self):
        return len(self.variables)

    def poly(self, text: str) -> Polynomial:
        return parse_poly(text, self.variables, self.field)

    def format(self, p: Polynomial) -> str:
        return p.format(self.variables)

    def to_json(self) -> dict:
        from .fields import field_to_config

        return {
            "variables": list(self.variables),
            "f": self.f.to_json(),
            "field": field_to_config(self.field),
        }

    @classmethod
    def from_json(cls, data: dict):
        from .fields import field_from_config

        field = field_from_config(data["field"])
        variables = tuple(data["variables"])
        f = Polynomial.from_json(data["f"], field, len(variables))
        return cls(variables, f, field)


class TruncatedAlgebra:
    """R_N with an explicit standard-monomial basis and exact reduction."""

    def __init__(self, spec: RingSpec, N: int):
        if N < 1:
            raise SpecError("truncation order must be >= 1")
        self.spec = spec
        self.N = N
        field = spec.field
        nvars = spec.nvars
        monos = monomials_below(nvars, N)
        # Columns ordered descending so row reduction pivots on the largest
        # monomial of each relation, keeping small monomials standard.
        desc = sorted(monos, key=grlex_key, reverse=True)
        col = {m: j for j, m in enumerate(desc)}

        rel_rows = []
        min_deg_f = spec.f.min_degree()
        for u in monomials_below(nvars, max(N - min_deg_f, 0)):
            row = [field.zero] * len(desc)
            nonzero = False
            for m, c in spec.f.terms.items():
                prod = mono_mul(u, m)
                if mono_deg(prod) < N:
                    j = col[prod]
                    row[j] = field.add(row[j], c)
                    nonzero = True
            if nonzero:
                rel_rows.append(row)
        basis_rows, pivots = rref(rel_rows, field) if rel_rows else ([], [])
        pivot_monos = {desc[j] for j in pivots}
        self.basis = sorted((m for m in monos if m not in pivot_monos), key=grlex_key)
        self.index = {m: i for i, m in enumerate(self.basis)}
        # pivot monomial -> coordinate vector over the standard basis
        self.rewrite = {}
        for row, j in zip(basis_rows, pivots):
            vec = [field.zero] * len(self.basis)
            for jj, c in enumerate(row):
                if jj == j or c == field.zero:
                    continue
                vec[self.index[desc[jj]]] = field.neg(c)
            self.rewrite[desc[j]] = vec

    @property
    def dim(self):
        return len(self.basis)

    @property
    def field(self):
        return self.spec.field

    def reduce(self, p: Polynomial):
        """Coordinate vector of p in R_N (exact)."""
        field = self.field
        coords = [field.zero] * self.dim
        for m, c in p.terms.items():
            if mono_deg(m) >= self.N:
                continue
            if m in self.index:
                i = self.index[m]
                coords[i] = field.add(coords[i], c)
            else:
                rw = self.rewrite[m]
                coords = [field.add(a, field.mul(c, b)) for a, b in zip(coords, rw)]
        return coords

    def lift(self, coords) -> Polynomial:
        """The standard-monomial representative with the given coordinates."""
        field = self.field
        terms = {}
        for m, c in zip(self.basis, coords):
            c = field.coerce(c)
            if c != field.zero:
                terms[m] = c
        return Polynomial(field, self.spec.nvars, terms)

    def reduce_product(self, p: Polynomial, q: Polynomial):
        return self.reduce(p * q)

    def multiplication_operator(self, p: Polynomial):
        """Matrix of multiplication by p: column j = reduce(p * basis[j])."""
        field = self.field
        cols = [self.reduce(p * Polynomial.from_monomial(field, b)) for b in self.basis]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def project_from(self, other: "TruncatedAlgebra", coords):
        """Image in self of an element of a finer truncation of the same ring."""
        if other.spec != self.spec or other.N < self.N:
            raise SpecError("not a projection between compatible truncations")
        return self.reduce(other.lift(coords))


@functools.lru_cache(maxsize=128)
def build_truncation(spec: RingSpec, N: int) -> TruncatedAlgebra:
    """Build (and memoize) R_N for a ring spec."""
    return TruncatedAlgebra(spec, N)
