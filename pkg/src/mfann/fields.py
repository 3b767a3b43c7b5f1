"""Exact coefficient fields: odd prime fields F_p and the rationals.

Elements of F_p are plain Python ints in [0, p); rational elements are
`fractions.Fraction`.  All arithmetic is exact -- nothing in this package
ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Raised for invalid field configurations or non-invertible elements."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """F_p for an odd prime p, optionally with a designated square root of -1."""

    kind = "prime-field"
    is_prime = True

    def __init__(self, p: int, imaginary_unit: int | None = None):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        self.p = p
        if imaginary_unit is not None:
            imaginary_unit %= p
            if (imaginary_unit * imaginary_unit + 1) % p != 0:
                raise FieldError(f"{imaginary_unit}^2 + 1 != 0 mod {p}")
        self.imaginary_unit = imaginary_unit

    zero = 0
    one = 1

    def coerce(self, v) -> int:
        if isinstance(v, Fraction):
            if v.denominator == 1:
                return v.numerator % self.p
            return self.div(v.numerator % self.p, v.denominator % self.p)
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("division by zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, s: str):
        return self.coerce(Fraction(s.strip()))

    def fmt(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return (
            isinstance(other, PrimeField)
            and other.p == self.p
            and other.imaginary_unit == self.imaginary_unit
        )

    def __hash__(self):
        return hash(("Fp", self.p, self.imaginary_unit))

    def __repr__(self):
        if self.imaginary_unit is None:
            return f"F{self.p}"
        return f"F{self.p}(i={self.imaginary_unit})"


class Rationals:
    """The field of rational numbers; elements are `Fraction`s."""

    kind = "rationals"
    is_prime = False
    imaginary_unit = None

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v) -> Fraction:
        return Fraction(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def parse(self, s: str):
        return Fraction(s.strip())

    def fmt(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def default_field() -> PrimeField:
    """F_13 with i = 5 (5^2 = 25 = -1 mod 13)."""
    return PrimeField(13, imaginary_unit=5)


def field_from_config(cfg: dict):
    """Build a field from its JSON configuration {kind, p?, i?}."""
    kind = cfg.get("kind")
    if kind == "prime-field":
        return PrimeField(int(cfg["p"]), cfg.get("i"))
    if kind == "rationals":
        return Rationals()
    raise FieldError(f"unknown field kind {kind!r}")


def field_to_config(field) -> dict:
    if isinstance(field, PrimeField):
        cfg = {"kind": "prime-field", "p": field.p}
        if field.imaginary_unit is not None:
            cfg["i"] = field.imaginary_unit
        return cfg
    return {"kind": "rationals"}


def parse_field_flag(s: str):
    """Parse a CLI field flag: 'fp:13', 'fp:13:i=5', or 'q'."""
    s = s.strip().lower()
    if s in ("q", "qq", "rationals"):
        return Rationals()
    if s.startswith("fp:"):
        parts = s[3:].split(":")
        try:
            p = int(parts[0])
            i = None
            for extra in parts[1:]:
                if extra.startswith("i="):
                    i = int(extra[2:])
        except ValueError:
            raise FieldError(f"cannot parse field flag {s!r} (expected fp:P or q)")
        if i is None and p == 13:
            i = 5
        return PrimeField(p, i)
    raise FieldError(f"cannot parse field flag {s!r} (expected fp:P or q)")
