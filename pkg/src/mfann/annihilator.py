"""Annihilators of stable endomorphism rings via matrix factorizations.

The criterion: r annihilates the stable endomorphisms of cok(phi) exactly
when phi*alpha + beta*psi = r*I has a solution.  Membership is certified in
two one-sided ways:

* an exact polynomial witness (alpha, beta, gamma) with
  phi*alpha + beta*psi - r*I = f*gamma proves membership over the complete
  ring;
* unsolvability of the truncated system in R_N proves non-membership (a
  global solution would truncate).

The truncated solvable set is itself computable as a subspace of R_N.  The
key structural fact used throughout: the image of (alpha, beta) |->
phi*alpha + beta*psi decomposes as "column space in every column plus row
space in every row", so all solves reduce to small quotient conditions
instead of one giant dense system.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field

from .ideals import IdealSpec, extract_generators, ideal_subspace_from_vectors, truncate_ideal
from .linalg import Subspace, kernel, mat_mul, rref, solve_affine
from .mf import MatrixFactorization, poly_mat_mul
from .poly import Polynomial, grlex_key, monomials_upto
from .truncation import TruncatedAlgebra, build_truncation

__all__ = [
    "Witness",
    "AnnihilatorResult",
    "row_col_bound",
    "membership_truncated",
    "annihilator_truncated",
    "witness_search",
    "annihilate",
]


@dataclass(frozen=True)
class Witness:
    """Exact certificate: phi*alpha + beta*psi - r*I = f*gamma."""

    r: Polynomial
    alpha: tuple
    beta: tuple
    gamma: tuple

    def verify(self, mf: MatrixFactorization) -> bool:
        spec = mf.spec
        zero = Polynomial.zero(spec.field, spec.nvars)
        lhs = poly_mat_mul(mf.phi, self.alpha)
        rhs = poly_mat_mul(self.beta, mf.psi)
        for i in range(mf.n):
            for j in range(mf.n):
                expect = spec.f * self.gamma[i][j]
                if i == j:
                    expect = expect + self.r
                if lhs[i][j] + rhs[i][j] != expect:
                    return False
        return True

    def max_degree(self) -> int:
        return max(
            [e.degree() for row in self.alpha for e in row]
            + [e.degree() for row in self.beta for e in row]
        )

    def to_json(self, spec) -> dict:
        return {
            "r": spec.format(self.r),
            "alpha": [[spec.format(e) for e in row] for row in self.alpha],
            "beta": [[spec.format(e) for e in row] for row in self.beta],
            "gamma": [[spec.format(e) for e in row] for row in self.gamma],
        }


def row_col_bound(mf: MatrixFactorization):
    """The ideals J_k = (row k of phi) + (column k of psi); their intersection
    bounds the annihilator from above."""
    out = []
    for k in range(mf.n):
        gens = []
        for entry in list(mf.phi[k]) + [mf.psi[i][k] for i in range(mf.n)]:
            if not entry.is_zero and entry not in gens:
                gens.append(entry)
        out.append(IdealSpec(mf.spec, tuple(gens), name=f"J_{k + 1}"))
    return out


# ---------------------------------------------------------------------------
# truncated solves
# ---------------------------------------------------------------------------


def _stack_columns(mf, algebra):
    """Column space C = span{reduce(b * phi[:, i])} inside k^(n*d)."""
    field = algebra.field
    n, d = mf.n, algebra.dim
    vectors = []
    for i in range(n):
        for b in algebra.basis:
            bm = Polynomial.from_monomial(field, b)
            vec = []
            for k in range(n):
                vec.extend(algebra.reduce(mf.phi[k][i] * bm))
            vectors.append(vec)
    return Subspace.from_vectors(field, n * d, vectors)


def _stack_rows(mf, algebra):
    """Row space R = span{reduce(b * psi[j, :])} inside k^(n*d)."""
    field = algebra.field
    n, d = mf.n, algebra.dim
    vectors = []
    for j in range(n):
        for b in algebra.basis:
            bm = Polynomial.from_monomial(field, b)
            vec = []
            for l in range(n):
                vec.extend(algebra.reduce(mf.psi[j][l] * bm))
            vectors.append(vec)
    return Subspace.from_vectors(field, n * d, vectors)


@functools.lru_cache(maxsize=64)
def _truncated_data(mf: MatrixFactorization, N: int):
    algebra = build_truncation(mf.spec, N)
    col_space = _stack_columns(mf, algebra)
    row_space = _stack_rows(mf, algebra)
    E = col_space.complement_functionals()
    return algebra, col_space, row_space, E


def _assemble_system(mf, algebra, row_space, E):
    """Homogeneous matrix over unknowns [r (d) | rho_0..rho_{n-1} (dimR each)].

    Row block j states: column j of r*I - sum_i iota_row_i(rho_i) lies in the
    column space, via the complement functionals E.
    """
    field = algebra.field
    n, d = mf.n, algebra.dim
    c = len(E)
    dimR = row_space.dim
    Rbasis = row_space.basis
    # E split into its n blocks of width d
    E_blocks = [[row[i * d:(i + 1) * d] for row in E] for i in range(n)]
    R_blocks = [[row[j * d:(j + 1) * d] for row in Rbasis] for j in range(n)]
    rows = []
    for j in range(n):
        # r part: E^{(j)};  rho_i part: -E^{(i)} @ Rbasis[:, j*d:(j+1)*d]^T
        blocks = [E_blocks[j]]
        for i in range(n):
            if dimR:
                Bt = [list(col) for col in zip(*R_blocks[j])]  # d x dimR
                prod = mat_mul(E_blocks[i], Bt, field)  # c x dimR
                blocks.append([[field.neg(v) for v in row] for row in prod])
            else:
                blocks.append([[] for _ in range(c)])
        for k in range(c):
            row = []
            for blk in blocks:
                row.extend(blk[k])
            rows.append(row)
    return rows


def annihilator_truncated(mf: MatrixFactorization, N: int) -> Subspace:
    """The subspace {r in R_N : phi*alpha + beta*psi = r*I solvable in R_N}."""
    algebra, _col, row_space, E = _truncated_data(mf, N)
    field = algebra.field
    d = algebra.dim
    if not E:
        return Subspace.full_space(field, d)
    rows = _assemble_system(mf, algebra, row_space, E)
    ncols = d + mf.n * row_space.dim
    null = kernel(rows, field, ncols=ncols)
    ann = Subspace.from_vectors(field, d, [v[:d] for v in null])
    # post-check: the solvable set is an ideal of R_N
    for v in range(mf.spec.nvars):
        xv = Polynomial.variable(field, mf.spec.nvars, v)
        for g in ann.basis:
            if not ann.contains(algebra.reduce(algebra.lift(g) * xv)):
                raise AssertionError("truncated annihilator is not an ideal")
    return ann


def membership_truncated(mf: MatrixFactorization, r: Polynomial, N: int) -> bool:
    """Solvability of phi*alpha + beta*psi = r*I over R_N.

    False certifies r is not in the annihilator over the complete ring;
    True is evidence only.
    """
    algebra, _col, row_space, E = _truncated_data(mf, N)
    field = algebra.field
    d = algebra.dim
    if not E:
        return True
    rows = _assemble_system(mf, algebra, row_space, E)
    r_vec = algebra.reduce(r)
    # fix the r coordinates: move the first d columns to the right-hand side
    A = [row[d:] for row in rows]
    b = []
    for row in rows:
        acc = field.zero
        for a, x in zip(row[:d], r_vec):
            acc = field.add(acc, field.mul(a, x))
        b.append(field.neg(acc))
    if not A or not A[0]:
        return all(v == field.zero for v in b)
    return solve_affine(A, b, field) is not None


# ---------------------------------------------------------------------------
# exact witness search
# ---------------------------------------------------------------------------


class _WitnessSearcher:
    """Degree-bounded exact solver for phi*alpha + beta*psi - r*I = f*gamma.

    The generator set for the column side is {m * phi[:, i]} together with
    the single-entry vectors {f * m e_k} absorbing gamma; beta is eliminated
    against the quotient by that span, exactly as in the truncated solve but
    over genuine polynomial coefficient space (no truncation, hence exact).
    """

    def __init__(self, mf: MatrixFactorization, D: int):
        self.mf = mf
        self.D = D
        spec = mf.spec
        field = spec.field
        n = mf.n
        entry_deg = max(
            [e.degree() for row in mf.phi for e in row if not e.is_zero]
            + [e.degree() for row in mf.psi for e in row if not e.is_zero]
        )
        self.gamma_bound = max(D + entry_deg - spec.f.min_degree(), 0)
        self.alpha_monos = monomials_upto(spec.nvars, D)
        self.gamma_monos = monomials_upto(spec.nvars, self.gamma_bound)

        # generator bookkeeping: ("a", i, mono) or ("g", k, mono)
        self.gen_tags = []
        gen_polys = []  # list of length-n polynomial vectors
        for i in range(n):
            for m in self.alpha_monos:
                bm = Polynomial.from_monomial(field, m)
                self.gen_tags.append(("a", i, m))
                gen_polys.append([mf.phi[k][i] * bm for k in range(n)])
        for k in range(n):
            for m in self.gamma_monos:
                bm = Polynomial.from_monomial(field, m)
                vec = [Polynomial.zero(field, spec.nvars) for _ in range(n)]
                vec[k] = spec.f * bm
                self.gen_tags.append(("g", k, m))
                gen_polys.append(vec)

        # beta products psi-row entries times alpha monomials
        self.beta_products = {}
        support = set()
        for j in range(n):
            for l in range(n):
                prods = []
                for m in self.alpha_monos:
                    prod = mf.psi[j][l] * Polynomial.from_monomial(field, m)
                    prods.append(prod)
                    support.update(prod.terms)
                self.beta_products[(j, l)] = prods
        for vec in gen_polys:
            for p in vec:
                support.update(p.terms)
        support.add((0,) * spec.nvars)
        self.support = sorted(support, key=grlex_key)
        self.mono_index = {m: idx for idx, m in enumerate(self.support)}
        s = len(self.support)
        self.s = s

        def poly_vec(polys):
            vec = [field.zero] * (n * s)
            for k, p in enumerate(polys):
                base = k * s
                for mm, cc in p.terms.items():
                    vec[base + self.mono_index[mm]] = cc
            return vec

        self._poly_vec = poly_vec
        self.gen_rows = [poly_vec(vec) for vec in gen_polys]
        basis, pivots, self.transform = rref(self.gen_rows, field, transform=True)
        self.col_space = Subspace(field, n * s, basis, pivots)
        self.E = self.col_space.complement_functionals()
        self.E_blocks = [[row[i * s:(i + 1) * s] for row in self.E] for i in range(n)]

        # coefficient blocks: for unknown beta[i][j] monomial m, its column in
        # equation block J is -E^{(i)} @ coeffs(m * psi[j][J])
        field_ = field
        self._beta_cols = {}
        if self.E:
            for j in range(n):
                for J in range(n):
                    if all(p.is_zero for p in self.beta_products[(j, J)]):
                        self._beta_cols[(j, J)] = None
                        continue
                    P = []
                    for p in self.beta_products[(j, J)]:
                        rowv = [field_.zero] * s
                        for mm, cc in p.terms.items():
                            rowv[self.mono_index[mm]] = cc
                        P.append(rowv)
                    Pt = [list(col) for col in zip(*P)]  # s x |alpha_monos|
                    self._beta_cols[(j, J)] = Pt

    def solvable_system(self, r: Polynomial):
        """Affine system (A, b) for the beta coefficients; None means the
        right-hand side support escapes the reachable monomials."""
        mf = self.mf
        field = mf.spec.field
        n = mf.n
        for m in r.terms:
            if m not in self.mono_index:
                return "unreachable"
        c = len(self.E)
        nm = len(self.alpha_monos)
        A_rows = []
        b = []
        for J in range(n):
            # unknown order: beta[i][j] coefficient vectors, (i, j) row-major
            blocks = []
            for i in range(n):
                for j in range(n):
                    Pt = self._beta_cols[(j, J)]
                    if Pt is None:
                        blocks.append(None)
                    else:
                        blocks.append(mat_mul(self.E_blocks[i], Pt, field))
            r_vec = [field.zero] * self.s
            for mm, cc in r.terms.items():
                r_vec[self.mono_index[mm]] = cc
            rhs_part = mat_mul(self.E_blocks[J], [[v] for v in r_vec], field)
            for k in range(c):
                row = []
                for blk in blocks:
                    row.extend([field.zero] * nm if blk is None else blk[k])
                A_rows.append(row)
                b.append(rhs_part[k][0])
        return A_rows, b

    def search(self, r: Polynomial):
        mf = self.mf
        spec = mf.spec
        field = spec.field
        n = mf.n
        sys_ = self.solvable_system(r)
        if sys_ == "unreachable":
            return None
        A_rows, b = sys_
        if not self.E:
            beta_coeffs = [field.zero] * (n * n * len(self.alpha_monos))
        else:
            sol = solve_affine(A_rows, b, field) if A_rows and A_rows[0] else (
                ([], []) if all(v == field.zero for v in b) else None
            )
            if sol is None:
                return None
            particular = sol[0]
            beta_coeffs = particular if particular else [field.zero] * (
                n * n * len(self.alpha_monos)
            )

        # rebuild beta
        zero = Polynomial.zero(field, spec.nvars)
        beta = [[zero for _ in range(n)] for _ in range(n)]
        idx = 0
        nm = len(self.alpha_monos)
        for i in range(n):
            for j in range(n):
                terms = {}
                for t, m in enumerate(self.alpha_monos):
                    c = field.coerce(beta_coeffs[idx + t])
                    if c != field.zero:
                        terms[m] = c
                beta[i][j] = Polynomial(field, spec.nvars, terms)
                idx += nm

        # residual per column: r*e_J - (beta*psi) column J, expressed in the
        # generator span to recover alpha and gamma
        alpha = [[zero for _ in range(n)] for _ in range(n)]
        gamma = [[zero for _ in range(n)] for _ in range(n)]
        bpsi = poly_mat_mul(beta, [[e for e in row] for row in mf.psi])
        for J in range(n):
            col = []
            for i in range(n):
                p = -bpsi[i][J]
                if i == J:
                    p = p + r
                col.append(p)
            vec = self._poly_vec(col)
            coords = self.col_space.coords(vec)
            if coords is None:
                return None
            # back to original generator coordinates through the transform
            gen_coords = [field.zero] * len(self.gen_rows)
            for c_val, trow in zip(coords, self.transform):
                if c_val != field.zero:
                    gen_coords = [
                        field.add(g, field.mul(c_val, t)) for g, t in zip(gen_coords, trow)
                    ]
            for coeff, tag in zip(gen_coords, self.gen_tags):
                if coeff == field.zero:
                    continue
                kind, k, m = tag
                term = Polynomial.from_monomial(field, m, coeff)
                if kind == "a":
                    alpha[k][J] = alpha[k][J] + term
                else:
                    gamma[k][J] = gamma[k][J] - term
        witness = Witness(
            r,
            tuple(tuple(row) for row in alpha),
            tuple(tuple(row) for row in beta),
            tuple(tuple(row) for row in gamma),
        )
        if not witness.verify(mf):
            raise AssertionError("recovered witness failed exact verification")
        return witness


@functools.lru_cache(maxsize=64)
def _searcher(mf: MatrixFactorization, D: int) -> _WitnessSearcher:
    return _WitnessSearcher(mf, D)


def witness_search(mf: MatrixFactorization, r: Polynomial, D: int):
    """Exact witness with deg(alpha), deg(beta) <= D, or None.

    None only means no witness exists within the degree budget.
    """
    if D < 0:
        raise ValueError("degree bound must be >= 0")
    return _searcher(mf, D).search(r)


# ---------------------------------------------------------------------------
# the composite computation
# ---------------------------------------------------------------------------


@dataclass
class AnnihilatorResult:
    label: str
    N: int
    D: int
    lower: list  # (generator, Witness)
    upper_generators: list
    upper_dim: int
    status: str  # certified-exact | bounded-gap | undetermined
    subspace: Subspace = dc_field(repr=False, default=None)

    def to_json(self, spec) -> dict:
        return {
            "label": self.label,
            "N": self.N,
            "D": self.D,
            "lower": [
                {"gen": spec.format(g), "witness": w.to_json(spec)} for g, w in self.lower
            ],
            "upper": {
                "generators": [spec.format(g) for g in self.upper_generators],
                "dim": self.upper_dim,
            },
            "status": self.status,
        }


def annihilate(mf: MatrixFactorization, N: int, D: int) -> AnnihilatorResult:
    """Full annihilator computation: truncated upper bound, generator
    extraction, witness search (ascending degree), status and bound checks."""
    algebra = build_truncation(mf.spec, N)
    upper = annihilator_truncated(mf, N)
    gens = extract_generators(upper, algebra)

    # Lemma-style upper bound: the subspace sits inside every J_k truncation
    for J_k in row_col_bound(mf):
        if not upper.is_subspace_of(truncate_ideal(J_k, algebra)):
            raise AssertionError("row/column bound violated by the truncated solve")

    lower = []
    witnessed_vectors = []
    remaining = list(gens)
    for d_try in range(D + 1):
        if not remaining:
            break
        still = []
        for g in remaining:
            w = witness_search(mf, g, d_try)
            if w is None:
                still.append(g)
            else:
                lower.append((g, w))
                witnessed_vectors.append(algebra.reduce(g))
        remaining = still

    if witnessed_vectors:
        witnessed_span = ideal_subspace_from_vectors(witnessed_vectors, algebra)
    else:
        witnessed_span = Subspace.zero_space(algebra.field, algebra.dim)
    if not remaining and witnessed_span == upper:
        status = "certified-exact"
    elif upper.dim == 0:
        status = "certified-exact"
    elif lower:
        status = "bounded-gap"
    else:
        status = "undetermined"
    lower.sort(key=lambda gw: grlex_key(max(gw[0].terms, key=grlex_key)))
    return AnnihilatorResult(
        mf.label, N, D, lower, gens, upper.dim, status, subspace=upper
    )
