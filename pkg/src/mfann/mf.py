"""Matrix factorizations of hypersurface equations and the countable-type catalog.

A matrix factorization is a pair (phi, psi) of n x n polynomial matrices
with phi*psi = psi*phi = f*I; it presents the maximal Cohen-Macaulay module
cok(phi).  The catalog hard-codes the complete lists of indecomposables for
the four countable-representation-type rings

    a-inf-1: k[[x,y]]/(x^2)        a-inf-2: k[[x,y,z]]/(x^2+z^2)
    d-inf-1: k[[x,y]]/(x^2 y)      d-inf-2: k[[x,y,z]]/(x^2 y+z^2)

in dimensions one and two, together with their expected annihilators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldError, default_field
from .ideals import IdealSpec
from .poly import Polynomial, parse_poly
from .truncation import RingSpec, SpecError

__all__ = [
    "MatrixFactorization",
    "ValidationReport",
    "CatalogEntry",
    "validate",
    "swap",
    "direct_sum",
    "knoerrer_double",
    "ring_spec",
    "catalog",
    "catalog_labels",
    "RING_IDS",
    "parse_selector",
]


def poly_mat_mul(A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                term = A[i][t] * B[t][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


@dataclass(frozen=True)
class MatrixFactorization:
    spec: RingSpec
    n: int
    phi: tuple  # tuple of tuples of Polynomial
    psi: tuple
    label: str = ""

    def __post_init__(self):
        if len(self.phi) != self.n or len(self.psi) != self.n:
            raise SpecError("matrix size does not match n")
        for row in list(self.phi) + list(self.psi):
            if len(row) != self.n:
                raise SpecError("matrices must be square of size n")
            for entry in row:
                if entry.nvars != self.spec.nvars or entry.field != self.spec.field:
                    raise SpecError("matrix entry not over the ring's variables")

    def format_matrix(self, which="phi"):
        mat = self.phi if which == "phi" else self.psi
        return [[self.spec.format(e) for e in row] for row in mat]

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "n": self.n,
            "phi": self.format_matrix("phi"),
            "psi": self.format_matrix("psi"),
            "label": self.label,
        }

    @classmethod
    def from_json(cls, data: dict):
        spec = RingSpec.from_json(data["spec"])
        phi = tuple(tuple(spec.poly(e) for e in row) for row in data["phi"])
        psi = tuple(tuple(spec.poly(e) for e in row) for row in data["psi"])
        return cls(spec, int(data["n"]), phi, psi, data.get("label", ""))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    product: str = ""  # which product failed: "phi*psi" or "psi*phi"
    entry: tuple = ()  # (i, j), 1-based
    got: str = ""
    expected: str = ""


def validate(mf: MatrixFactorization) -> ValidationReport:
    """Check phi*psi = psi*phi = f*I exactly; report the first violation."""
    spec = mf.spec
    f = spec.f
    zero = Polynomial.zero(spec.field, spec.nvars)
    for name, prod in (("phi*psi", poly_mat_mul(mf.phi, mf.psi)),
                       ("psi*phi", poly_mat_mul(mf.psi, mf.phi))):
        for i in range(mf.n):
            for j in range(mf.n):
                expected = f if i == j else zero
                if prod[i][j] != expected:
                    return ValidationReport(
                        False, name, (i + 1, j + 1),
                        spec.format(prod[i][j]), spec.format(expected),
                    )
    return ValidationReport(True)


def swap(mf: MatrixFactorization) -> MatrixFactorization:
    """The syzygy: cok(phi) -> cok(psi), i.e. exchange the pair."""
    return MatrixFactorization(mf.spec, mf.n, mf.psi, mf.phi, f"swap({mf.label})")


def direct_sum(a: MatrixFactorization, b: MatrixFactorization) -> MatrixFactorization:
    if a.spec != b.spec:
        raise SpecError("direct sum of factorizations over different rings")
    zero = Polynomial.zero(a.spec.field, a.spec.nvars)
    n = a.n + b.n

    def block(x, y):
        rows = []
        for i in range(a.n):
            rows.append(tuple(x[i]) + (zero,) * b.n)
        for i in range(b.n):
            rows.append((zero,) * a.n + tuple(y[i]))
        return tuple(rows)

    return MatrixFactorization(
        a.spec, n, block(a.phi, b.phi), block(a.psi, b.psi),
        f"sum({a.label},{b.label})",
    )


def knoerrer_double(mf: MatrixFactorization, new_variable: str = "z") -> MatrixFactorization:
    """The factorization [[t*I, phi], [psi, -t*I]] of f + t^2 over spec + t."""
    spec = mf.spec
    if new_variable in spec.variables:
        raise SpecError(f"variable {new_variable!r} already present in the ring")
    variables = spec.variables + (new_variable,)
    nv = len(variables)
    field = spec.field
    t = Polynomial.variable(field, nv, nv - 1)
    f_new = spec.f.extend(nv) + t * t
    new_spec = RingSpec(variables, f_new, field)
    zero = Polynomial.zero(field, nv)
    n = mf.n
    rows = []
    for i in range(n):
        rows.append(tuple(t if i == j else zero for j in range(n))
                    + tuple(mf.phi[i][j].extend(nv) for j in range(n)))
    for i in range(n):
        rows.append(tuple(mf.psi[i][j].extend(nv) for j in range(n))
                    + tuple(-t if i == j else zero for j in range(n)))
    big = tuple(rows)
    return MatrixFactorization(new_spec, 2 * n, big, big, f"double({mf.label})")


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

RING_IDS = ("a-inf-1", "a-inf-2", "d-inf-1", "d-inf-2")

_RING_DEFS = {
    "a-inf-1": (("x", "y"), "x^2"),
    "a-inf-2": (("x", "y", "z"), "x^2+z^2"),
    "d-inf-1": (("x", "y"), "x^2*y"),
    "d-inf-2": (("x", "y", "z"), "x^2*y+z^2"),
}


class CatalogError(ValueError):
    """Unknown label, missing parameter, or unusable field."""


def ring_spec(ring_id: str, field=None) -> RingSpec:
    if ring_id not in _RING_DEFS:
        raise CatalogError(f"unknown ring {ring_id!r} (expected one of {RING_IDS})")
    if field is None:
        field = default_field()
    variables, f_text = _RING_DEFS[ring_id]
    return RingSpec(variables, parse_poly(f_text, variables, field), field)


@dataclass(frozen=True)
class CatalogEntry:
    family: str  # "A-inf" | "D-inf"
    dim: int
    label: str
    n: int | None
    mf: MatrixFactorization
    expected_annihilator: IdealSpec
    locally_free_on_punctured_spectrum: bool

    @property
    def ring_id(self):
        return f"{'a' if self.family == 'A-inf' else 'd'}-inf-{self.dim}"


def _mat(spec, rows):
    return tuple(tuple(spec.poly(e) for e in row) for row in rows)


def _i_str(spec):
    i = spec.field.imaginary_unit
    if i is None:
        raise CatalogError(
            "this catalog entry needs a square root of -1; "
            "the configured field has none"
        )
    return spec.field.fmt(i)


# label -> (parametric?, builder(spec, n) -> (phi_rows, psi_rows, ann_gens, locally_free))

def _a1_entries():
    def rxr(spec, n):
        return [["x"]], [["x"]], ["x"], False

    def phi(spec, n):
        m = [["x", f"y^{n}"], ["0", "-x"]]
        return m, m, ["x", f"y^{n}"], True

    return {"R/xR": (False, rxr), "phi": (True, phi)}


def _a2_entries():
    def r_minus(spec, n):
        i = _i_str(spec)
        return [[f"z-{i}*x"]], [[f"z+{i}*x"]], ["x", "z"], False

    def r_plus(spec, n):
        i = _i_str(spec)
        return [[f"z+{i}*x"]], [[f"z-{i}*x"]], ["x", "z"], False

    def psi_pair(spec, n):
        i = _i_str(spec)
        plus = [[f"z-{i}*x", f"y^{n}"], ["0", f"z+{i}*x"]]
        minus = [[f"z+{i}*x", f"-y^{n}"], ["0", f"z-{i}*x"]]
        return plus, minus

    def psi_p(spec, n):
        plus, minus = psi_pair(spec, n)
        return plus, minus, ["x", f"y^{n}", "z"], False

    def psi_m(spec, n):
        plus, minus = psi_pair(spec, n)
        return minus, plus, ["x", f"y^{n}", "z"], False

    return {
        "R/(z-ix)": (False, r_minus),
        "R/(z+ix)": (False, r_plus),
        "psi+": (True, psi_p),
        "psi-": (True, psi_m),
    }


def _d1_mats(n):
    alpha = [["x*y", f"y^{n}"], ["0", "-x"]]
    beta = [["x", f"y^{n}"], ["0", "-x*y"]]
    gamma = [["x", f"y^{n}"], ["0", "-x"]]
    delta = [["x*y", f"y^{n + 1}"], ["0", "-x*y"]]
    return alpha, beta, gamma, delta


def _d1_entries():
    def simple(phi, psi, ann):
        def build(spec, n):
            return [[phi]], [[psi]], ann, False
        return build

    def alpha(spec, n):
        a, b, _g, _d = _d1_mats(n)
        return a, b, ["x", f"y^{n}"], False

    def beta(spec, n):
        a, b, _g, _d = _d1_mats(n)
        return b, a, ["x", f"y^{n}"], False

    def gamma(spec, n):
        _a, _b, g, d = _d1_mats(n)
        return g, d, ["x^2", "x*y", f"y^{n + 1}"], False

    def delta(spec, n):
        _a, _b, g, d = _d1_mats(n)
        return d, g, ["x^2", "x*y", f"y^{n + 1}"], False

    return {
        "R/xR": (False, simple("x", "x*y", ["x"])),
        "R/xyR": (False, simple("x*y", "x", ["x"])),
        "R/yR": (False, simple("y", "x^2", ["x^2", "y"])),
        "R/x^2R": (False, simple("x^2", "y", ["x^2", "y"])),
        "alpha": (True, alpha),
        "beta": (True, beta),
        "gamma": (True, gamma),
        "delta": (True, delta),
    }


def _d2_mats(n):
    alpha_p = [["z", "y"], ["-x^2", "z"]]
    alpha_m = [["z", "-y"], ["x^2", "z"]]
    beta_p = [["z", "x*y"], ["-x", "z"]]
    beta_m = [["z", "-x*y"], ["x", "z"]]
    gamma_p = [
        ["z", "0", "x*y", "0"],
        ["0", "z", f"y^{n + 1}", "-x"],
        ["-x", "0", "z", "0"],
        [f"-y^{n + 1}", "x*y", "0", "z"],
    ]
    gamma_m = [
        ["z", "0", "-x*y", "0"],
        ["0", "z", f"-y^{n + 1}", "x"],
        ["x", "0", "z", "0"],
        [f"y^{n + 1}", "-x*y", "0", "z"],
    ]
    delta_p = [
        ["z", "0", "x*y", "0"],
        ["0", "z", f"y^{n + 1}", "-x*y"],
        ["-x", "0", "z", "0"],
        [f"-y^{n}", "x", "0", "z"],
    ]
    delta_m = [
        ["z", "0", "-x*y", "0"],
        ["0", "z", f"-y^{n + 1}", "x*y"],
        ["x", "0", "z", "0"],
        [f"y^{n}", "-x", "0", "z"],
    ]
    return alpha_p, alpha_m, beta_p, beta_m, gamma_p, gamma_m, delta_p, delta_m


def _d2_entries():
    def make(index_phi, index_psi, ann, parametric):
        def build(spec, n):
            mats = _d2_mats(n if n is not None else 1)
            return mats[index_phi], mats[index_psi], list(ann), False
        return parametric, build

    ann_alpha = ["x^2", "y", "z"]
    ann_beta = ["x", "z"]
    return {
        "alpha+": make(0, 1, ann_alpha, False),
        "alpha-": make(1, 0, ann_alpha, False),
        "beta+": make(2, 3, ann_beta, False),
        "beta-": make(3, 2, ann_beta, False),
        "gamma+": make(4, 5, ["x", "y^{n_plus_1}", "z"], True),
        "gamma-": make(5, 4, ["x", "y^{n_plus_1}", "z"], True),
        "delta+": make(6, 7, ["x^2", "x*y", "y^{n_plus_1}", "z"], True),
        "delta-": make(7, 6, ["x^2", "x*y", "y^{n_plus_1}", "z"], True),
    }


_ENTRY_TABLES = {
    "a-inf-1": _a1_entries(),
    "a-inf-2": _a2_entries(),
    "d-inf-1": _d1_entries(),
    "d-inf-2": _d2_entries(),
}

# direct-sum objects named in the compactness statements
_SUM_LABELS = {
    "d-inf-1": {"sum(R/xR,R/yR)": (("R/xR", None), ("R/yR", None), ["x^2", "x*y"])},
    "d-inf-2": {"sum(alpha-,beta-)": (("alpha-", None), ("beta-", None), ["x^2", "x*y", "z"])},
}


def catalog_labels(ring_id: str):
    """(label, parametric?) pairs for a ring, in catalog order."""
    if ring_id not in _ENTRY_TABLES:
        raise CatalogError(f"unknown ring {ring_id!r}")
    out = [(label, entry[0]) for label, entry in _ENTRY_TABLES[ring_id].items()]
    out.extend((label, False) for label in _SUM_LABELS.get(ring_id, {}))
    return out


def catalog(ring_id: str, label: str, n: int | None = None, field=None) -> CatalogEntry:
    """Look up a catalog entry; n is required for parametric labels."""
    if ring_id not in _ENTRY_TABLES:
        raise CatalogError(f"unknown ring {ring_id!r}")
    spec = ring_spec(ring_id, field)
    family = "A-inf" if ring_id.startswith("a") else "D-inf"
    dim = int(ring_id[-1])

    sums = _SUM_LABELS.get(ring_id, {})
    if label in sums:
        (la, na), (lb, nb), ann = sums[label]
        a = catalog(ring_id, la, na, field)
        b = catalog(ring_id, lb, nb, field)
        mf = direct_sum(a.mf, b.mf)
        mf = MatrixFactorization(mf.spec, mf.n, mf.phi, mf.psi, f"{ring_id}/{label}")
        return CatalogEntry(
            family, dim, label, None, mf,
            IdealSpec.from_strings(spec, ann, name=f"Ann({label})"), False,
        )

    table = _ENTRY_TABLES[ring_id]
    if label not in table:
        raise CatalogError(f"unknown label {label!r} for ring {ring_id}")
    parametric, build = table[label]
    if parametric and n is None:
        raise CatalogError(f"label {label!r} is parametric: n is required")
    if not parametric:
        n = None
    phi_rows, psi_rows, ann_gens, locally_free = build(spec, n)
    ann_gens = [g.replace("{n_plus_1}", str((n or 0) + 1)) for g in ann_gens]
    mf_label = f"{ring_id}/{label}" + (f"?n={n}" if n is not None else "")
    mf = MatrixFactorization(spec, len(phi_rows), _mat(spec, phi_rows),
                             _mat(spec, psi_rows), mf_label)
    expected = IdealSpec.from_strings(spec, ann_gens, name=f"Ann({label})")
    return CatalogEntry(family, dim, label, n, mf, expected, locally_free)


def parse_selector(selector: str, field=None, default_n=None):
    """Parse 'd-inf-2/delta+?n=2' into a CatalogEntry."""
    if "/" not in selector:
        raise CatalogError(f"selector {selector!r} must look like ring/label[?n=K]")
    ring_id, rest = selector.split("/", 1)
    n = default_n
    if "?" in rest:
        rest, query = rest.split("?", 1)
        if not query.startswith("n="):
            raise CatalogError(f"unknown selector query {query!r}")
        n = int(query[2:])
    return catalog(ring_id, rest, n, field)
