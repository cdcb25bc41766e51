"""Exact scalars: rationals (backed by :class:`fractions.Fraction`) and prime fields.

Two layers live here.  The value types :data:`BigRational` and
:class:`PrimeFieldElem` are what callers see.  The field descriptors
:class:`RationalField` and :class:`PrimeField` do arithmetic on *raw* values
(``Fraction`` resp. ``int`` in ``[0, p)``) and are what the polynomial kernel
uses on its hot paths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

BigRational = Fraction

Scalar = Union[Fraction, int]


class CharacteristicError(ValueError):
    """A construction was requested in a characteristic where it is undefined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"3/2"``, ``"-7"`` or ``" 4 / 6 "`` into a reduced fraction."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_arith(lhs: Fraction, rhs: Fraction, op: str) -> Fraction:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if rhs == 0:
            raise ZeroDivisionError("rational division by zero")
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class PrimeFieldElem:
    value: int
    modulus: int

    def __post_init__(self) -> None:
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        if self.modulus == 2:
            raise CharacteristicError("characteristic 2 is excluded")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: object) -> int:
        if isinstance(other, PrimeFieldElem):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * fp_inverse(PrimeFieldElem(v, self.modulus))

    def __pow__(self, k: int):
        if k < 0:
            return fp_inverse(self) ** (-k)
        return PrimeFieldElem(pow(self.value, k, self.modulus), self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


def fp_inverse(x: PrimeFieldElem) -> PrimeFieldElem:
    if x.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{x.modulus}")
    return PrimeFieldElem(pow(x.value, -1, x.modulus), x.modulus)


class RationalField:
    """The field of rationals, acting on raw :class:`Fraction` values."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    @property
    def tag(self) -> str:
        return "q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, PrimeFieldElem):
            raise TypeError("cannot coerce a prime field element into QQ")
        if isinstance(x, str):
            return parse_rational(x)
        return Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        if not x:
            raise ZeroDivisionError("rational division by zero")
        return 1 / x

    def to_str(self, x: Fraction) -> str:
        return format_rational(x)

    def to_json(self) -> dict:
        return {"type": "rational"}


class PrimeField:
    """The prime field F_p acting on raw ``int`` values in ``[0, p)``."""

    zero = 0
    one = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise CharacteristicError("characteristic 2 is excluded: every construction needs 1/2")
        self.p = p
        self.characteristic = p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    @property
    def tag(self) -> str:
        return f"fp:{self.p}"

    def __call__(self, x) -> int:
        if isinstance(x, PrimeFieldElem):
            if x.modulus != self.p:
                raise ValueError(f"modulus mismatch: {x.modulus} vs {self.p}")
            return x.value
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has a denominator divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(x, -1, self.p)

    def to_str(self, x: int) -> str:
        return str(x)

    def to_json(self) -> dict:
        return {"type": "fp", "p": self.p}


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def field_from_tag(tag: str) -> Field:
    """``"q"`` selects the rationals, ``"fp:<p>"`` a prime field."""
    tag = tag.strip().lower()
    if tag in ("q", "qq", "rational", "rationals"):
        return QQ
    if tag.startswith("fp:"):
        return PrimeField(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r} (expected 'q' or 'fp:<p>')")


def require_characteristic_not(field: Field, *excluded: int) -> None:
    if field.characteristic in excluded:
        raise CharacteristicError(
            f"characteristic {field.characteristic} is not allowed here (excluded: {excluded})"
        )
