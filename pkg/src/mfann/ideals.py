"""Ideal arithmetic over the hypersurface ring, decided at truncation level.

Finite ideals are generator lists; parametric families carry a single
pure-power tail generator g^(n+offset), which covers every family appearing
in the annihilator tables (x, y^n), (x^2, xy, y^(n+1)), (x, y^(n+1), z), ...
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .linalg import Subspace, solve_affine
from .poly import Polynomial, grlex_key, mono_mul, monomials_upto
from .truncation import RingSpec, SpecError, TruncatedAlgebra, build_truncation

__all__ = [
    "IdealSpec",
    "ParametricIdealFamily",
    "MemberResult",
    "LimitResult",
    "truncate_ideal",
    "ideal_subspace_from_vectors",
    "extract_generators",
    "member",
    "intersect_at",
    "sum_at",
    "is_m_primary",
    "limit_of_chain",
]


@dataclass(frozen=True)
class IdealSpec:
    """A finitely generated ideal of the hypersurface ring."""

    spec: RingSpec
    generators: tuple
    name: str = ""

    def __post_init__(self):
        for g in self.generators:
            if g.is_zero:
                raise SpecError("zero generator (the zero ideal is the empty list)")
            if g.nvars != self.spec.nvars or g.field != self.spec.field:
                raise SpecError("generator not over the ideal's ring")

    @classmethod
    def from_strings(cls, spec: RingSpec, gens, name=""):
        return cls(spec, tuple(spec.poly(g) for g in gens), name)

    def format(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(self.spec.format(g) for g in self.generators) + ")"

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "generators": [self.spec.format(g) for g in self.generators],
            "name": self.name,
        }

    @classmethod
    def from_json(cls, data: dict):
        spec = RingSpec.from_json(data["spec"])
        return cls.from_strings(spec, data["generators"], data.get("name", ""))


@dataclass(frozen=True)
class ParametricIdealFamily:
    """fixed generators + one tail generator base^(n+offset), n = 1, 2, ..."""

    spec: RingSpec
    fixed: tuple
    tail_base: Polynomial
    tail_offset: int = 0
    name: str = ""

    def instantiate(self, n: int) -> IdealSpec:
        if n < 1:
            raise ValueError("parameter must be a positive integer")
        gens = tuple(self.fixed) + (self.tail_base ** (n + self.tail_offset),)
        label = f"{self.name}[n={n}]" if self.name else f"[n={n}]"
        return IdealSpec(self.spec, gens, label)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "fixed": [self.spec.format(g) for g in self.fixed],
            "tail": {"monomial": self.spec.format(self.tail_base), "offset": self.tail_offset},
            "name": self.name,
        }


def truncate_ideal(ideal: IdealSpec, algebra: TruncatedAlgebra) -> Subspace:
    """Subspace of R_N spanned by {reduce(g * b) : g generator, b basis monomial}."""
    if ideal.spec != algebra.spec:
        raise SpecError("ideal and algebra are over different rings")
    field = algebra.field
    vectors = []
    for g in ideal.generators:
        for b in algebra.basis:
            vectors.append(algebra.reduce(g * Polynomial.from_monomial(field, b)))
    return Subspace.from_vectors(field, algebra.dim, vectors)


def ideal_subspace_from_vectors(vectors, algebra: TruncatedAlgebra) -> Subspace:
    """Ideal of R_N generated by elements given as coordinate vectors."""
    field = algebra.field
    out = []
    for v in vectors:
        p = algebra.lift(v)
        for b in algebra.basis:
            out.append(algebra.reduce(p * Polynomial.from_monomial(field, b)))
    return Subspace.from_vectors(field, algebra.dim, out)


def extract_generators(space: Subspace, algebra: TruncatedAlgebra):
    """Greedy generator extraction, ascending (degree, graded-lex) pivot order.

    Returns polynomials whose generated ideal at level N equals the subspace.
    The echelon basis of an ideal subspace is already sorted by pivot, and
    pivots index the ascending graded-lex monomial basis, so scanning rows in
    order is the greedy small-degree-first scan.
    """
    gens = []
    gen_vectors = []
    current = Subspace.zero_space(algebra.field, algebra.dim)
    for row in space.basis:
        if current.contains(row):
            continue
        gens.append(algebra.lift(row))
        gen_vectors.append(row)
        current = ideal_subspace_from_vectors(gen_vectors, algebra)
        if current.dim == space.dim:
            break
    return gens


@dataclass(frozen=True)
class MemberResult:
    status: str  # yes-certified | no-certified | undetermined
    cofactors: tuple = ()  # h_i with p = sum h_i g_i + h_0 f  (h_0 last)

    @property
    def is_member(self):
        return self.status == "yes-certified"


def member(p: Polynomial, ideal: IdealSpec, N: int, D: int) -> MemberResult:
    """Certified ideal membership.

    yes-certified: exact cofactors p = sum h_i g_i + h_0 f with deg h_i <= D
    (h_0 bounded by the same window).  no-certified: reduce(p) falls outside
    the truncated ideal at level N, which decides non-membership in the
    complete local ring by Krull intersection.  Otherwise undetermined.
    """
    algebra = build_truncation(ideal.spec, N)
    space = truncate_ideal(ideal, algebra)
    if not space.contains(algebra.reduce(p)):
        return MemberResult("no-certified")
    spec = ideal.spec
    f = spec.field
    gens = list(ideal.generators) + [spec.f]
    monos = monomials_upto(spec.nvars, D)
    # column per (generator, monomial) cofactor coefficient
    columns = []
    support = set(p.terms)
    products = []
    for g in gens:
        for m in monos:
            prod = g * Polynomial.from_monomial(f, m)
            products.append(prod)
            support.update(prod.terms)
    support = sorted(support, key=grlex_key)
    row_of = {mm: i for i, mm in enumerate(support)}
    A = [[f.zero] * len(products) for _ in support]
    for j, prod in enumerate(products):
        for mm, c in prod.terms.items():
            A[row_of[mm]][j] = c
    b = [f.zero] * len(support)
    for mm, c in p.terms.items():
        b[row_of[mm]] = c
    sol = solve_affine(A, b, f)
    if sol is None:
        return MemberResult("undetermined")
    particular, _ = sol
    cofactors = []
    j = 0
    for _g in gens:
        terms = {}
        for m in monos:
            c = f.coerce(particular[j])
            if c != f.zero:
                terms[m] = c
            j += 1
        cofactors.append(Polynomial(f, spec.nvars, terms))
    return MemberResult("yes-certified", tuple(cofactors))


def sum_at(I: IdealSpec, J: IdealSpec, algebra: TruncatedAlgebra) -> Subspace:
    if I.spec != J.spec:
        raise SpecError("ideal sum across different rings")
    return truncate_ideal(I, algebra) + truncate_ideal(J, algebra)


def intersect_at(I: IdealSpec, J: IdealSpec, algebra: TruncatedAlgebra):
    """Exact truncated intersection, with re-verified generator extraction.

    Returns (subspace, generators-or-None): the extracted generators are
    checked again at level N + 2, and dropped (None) if the lift overfits
    the truncation.
    """
    if I.spec != J.spec:
        raise SpecError("ideal intersection across different rings")
    space = truncate_ideal(I, algebra).intersect(truncate_ideal(J, algebra))
    gens = extract_generators(space, algebra)
    algebra2 = build_truncation(algebra.spec, algebra.N + 2)
    expected2 = truncate_ideal(I, algebra2).intersect(truncate_ideal(J, algebra2))
    got2 = truncate_ideal(IdealSpec(algebra.spec, tuple(gens)) if gens else
                          IdealSpec(algebra.spec, ()), algebra2)
    if got2 != expected2:
        return space, None
    return space, gens


@dataclass(frozen=True)
class MPrimaryResult:
    status: str  # m-primary | not-m-primary-evidence | undetermined
    colength: int | None = None
    colengths: tuple = ()
    certified_level: int | None = None


def is_m_primary(ideal: IdealSpec, N_max: int) -> MPrimaryResult:
    """Colength probe: stabilization over three consecutive levels, certified
    by checking the image of m^(N-1) lies inside the truncated ideal."""
    if N_max < 3:
        raise ValueError("N_max must be >= 3")
    spec = ideal.spec
    colengths = []
    for N in range(3, N_max + 1):
        algebra = build_truncation(spec, N)
        space = truncate_ideal(ideal, algebra)
        colengths.append(algebra.dim - space.dim)
        if len(colengths) >= 3 and colengths[-1] == colengths[-2] == colengths[-3]:
            # certificate: every degree-(N-1) monomial reduces into the ideal
            field = spec.field
            ok = True
            for m in monomials_upto(spec.nvars, N - 1):
                if sum(m) != N - 1:
                    continue
                if not space.contains(algebra.reduce(Polynomial.from_monomial(field, m))):
                    ok = False
                    break
            if ok:
                return MPrimaryResult("m-primary", colengths[-1], tuple(colengths), N)
            return MPrimaryResult("undetermined", None, tuple(colengths), None)
    if all(b > a for a, b in zip(colengths, colengths[1:])):
        return MPrimaryResult("not-m-primary-evidence", None, tuple(colengths), None)
    return MPrimaryResult("undetermined", None, tuple(colengths), None)


@dataclass(frozen=True)
class LimitResult:
    status: str  # verified-at-scale | refuted
    n_max: int
    N: int
    failure: str = ""


def limit_of_chain(
    family: ParametricIdealFamily,
    candidate: IdealSpec,
    n_max: int,
    N: int,
    D: int = 4,
) -> LimitResult:
    """Check that the candidate is the limit of the descending family.

    (a) every candidate generator is a yes-certified member of each
    instantiation, (b) the truncated intersection over n <= n_max equals the
    candidate's truncation, (c) the family truly descends at truncation N.
    """
    algebra = build_truncation(family.spec, N)
    instances = [family.instantiate(n) for n in range(1, n_max + 1)]
    for inst in instances:
        for g in candidate.generators:
            res = member(g, inst, N, D)
            if not res.is_member:
                return LimitResult(
                    "refuted", n_max, N,
                    f"{candidate.format()} not certified inside {inst.format()}",
                )
    spaces = [truncate_ideal(inst, algebra) for inst in instances]
    for k in range(len(spaces) - 1):
        if not spaces[k + 1].is_subspace_of(spaces[k]):
            return LimitResult("refuted", n_max, N, f"family does not descend at n={k + 1}")
    # The finite intersection is faithful to the infinite one only below the
    # degree of the last tail generator; compare there.
    tail_degree = family.tail_base.degree() * (n_max + family.tail_offset)
    N_cmp = min(N, tail_degree)
    if N_cmp < 1:
        return LimitResult("refuted", n_max, N, "tail degenerates at this scale")
    cmp_algebra = build_truncation(family.spec, N_cmp)
    meet = truncate_ideal(instances[0], cmp_algebra)
    for inst in instances[1:]:
        meet = meet.intersect(truncate_ideal(inst, cmp_algebra))
    if meet != truncate_ideal(candidate, cmp_algebra):
        return LimitResult("refuted", n_max, N, "truncated intersection differs from candidate")
    return LimitResult("verified-at-scale", n_max, N)
