"""Exact scalars over the rationals or a prime field GF(p).

Values are immutable and always canonical: rationals are reduced fractions
with a positive denominator (backed by fractions.Fraction), prime-field
values are the least nonnegative residue. Mixing scalars from different
fields raises FieldMismatchError rather than coercing.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError, ParseError

# optional '-', digits, optionally '/' and more digits; no whitespace inside
_LITERAL = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?\Z")


class FieldKind(enum.Enum):
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo prime p by the extended Euclidean algorithm."""
    r0, r1 = a, p
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


@dataclass(frozen=True)
class FieldSpec:
    """Names the field scalars live in: the rationals, or GF(p) for prime p."""

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rationals carry no modulus")
        elif self.modulus is None or not _is_prime(self.modulus):
            raise ValueError(f"modulus must be a prime, got {self.modulus!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    def zero(self) -> Scalar:
        return Scalar(self, 0)

    def one(self) -> Scalar:
        return Scalar(self, 1)

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"GF({self.modulus})"


QQ = FieldSpec(FieldKind.RATIONALS)


def GF(p: int) -> FieldSpec:
    """The prime field with p elements."""
    return FieldSpec(FieldKind.PRIME_FIELD, p)


class Scalar:
    """One field element; Fraction-backed over Q, residue-backed over GF(p)."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int | Fraction):
        if spec.is_rational:
            if not isinstance(value, Fraction):
                value = Fraction(value)
        else:
            p = spec.modulus
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise ZeroDivisionError(
                        f"denominator {value.denominator} vanishes in {spec}"
                    )
                value = value.numerator * _inv_mod(value.denominator % p, p)
            value = value % p
        self.spec = spec
        self.value = value

    @staticmethod
    def _make(spec: FieldSpec, value) -> Scalar:
        # internal fast path: value is already canonical for spec
        s = Scalar.__new__(Scalar)
        s.spec = spec
        s.value = value
        return s

    def _check(self, other: Scalar) -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise FieldMismatchError(f"cannot mix {self.spec} and {other.spec}")

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        if self.spec.is_rational:
            return Scalar._make(self.spec, self.value + other.value)
        return Scalar._make(self.spec, (self.value + other.value) % self.spec.modulus)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        if self.spec.is_rational:
            return Scalar._make(self.spec, self.value - other.value)
        return Scalar._make(self.spec, (self.value - other.value) % self.spec.modulus)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        if self.spec.is_rational:
            return Scalar._make(self.spec, self.value * other.value)
        return Scalar._make(self.spec, (self.value * other.value) % self.spec.modulus)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inv()

    def __neg__(self) -> Scalar:
        if self.spec.is_rational:
            return Scalar._make(self.spec, -self.value)
        return Scalar._make(self.spec, (-self.value) % self.spec.modulus)

    def inv(self) -> Scalar:
        if not self.value:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.spec.is_rational:
            return Scalar._make(
                self.spec, Fraction(self.value.denominator, self.value.numerator)
            )
        return Scalar._make(self.spec, _inv_mod(self.value, self.spec.modulus))

    def is_zero(self) -> bool:
        return not self.value

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __str__(self) -> str:
        if self.spec.is_rational:
            v = self.value
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.spec}, {self})"


def parse_scalar(text: str, spec: FieldSpec) -> Scalar:
    """Parse an integer or "a/b" literal into a canonical Scalar.

    Over GF(p) a fraction literal means a times the inverse of b; a
    denominator divisible by p is rejected with ZeroDivisionError, as is a
    literal zero denominator over the rationals.
    """
    m = _LITERAL.fullmatch(text)
    if m is None:
        raise ParseError(f"malformed scalar literal {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Scalar(spec, num)
    den = int(m.group(2))
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in literal {text!r}")
    return Scalar(spec, Fraction(num, den))


def as_scalar(value, spec: FieldSpec) -> Scalar:
    """Coerce an int, Fraction, literal string, or Scalar into the field."""
    if isinstance(value, Scalar):
        if value.spec != spec:
            raise FieldMismatchError(f"scalar in {value.spec} used in {spec}")
        return value
    if isinstance(value, str):
        return parse_scalar(value, spec)
    if isinstance(value, (int, Fraction)):
        return Scalar(spec, value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a scalar")
