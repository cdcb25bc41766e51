"""Coefficient rings: QQ, GF(p), or a quotient ``field[vars]/I`` in normal form.

Families of covers live over rings such as ``QQ[m,a,b]`` (no relations) or
``QQ[w]/(w^2+3)``; elements are always stored as the normal form modulo a
reduced Groebner basis of the defining ideal, so ``==`` and ``hash`` are
structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactnum import QQ, Field, PrimeField, PrimeFieldElem, field_from_tag
from .groebner import GroebnerBasis, buchberger
from .poly import GREVLEX, Ideal, MonomialOrder, Poly, PolyRing, format_poly, parse_poly

_RAW_SCALARS = (int, Fraction, PrimeFieldElem)


class CoeffRing:
    """A commutative coefficient ring with canonical element representatives."""

    def __init__(
        self,
        kind: str,
        field: Field,
        variables: Sequence[str] = (),
        relations: Iterable[Poly | str] = (),
        order: MonomialOrder = GREVLEX,
    ):
        if kind not in ("rational", "fp", "quotient"):
            raise ValueError(f"unknown ring kind {kind!r}")
        self.kind = kind
        self.field = field
        self.characteristic = field.characteristic
        self.poly_ring: PolyRing | None = None
        self.ideal: Ideal | None = None
        self.gb: GroebnerBasis | None = None
        if kind == "quotient":
            self.poly_ring = PolyRing(variables, field, order)
            rels = [parse_poly(r, self.poly_ring) if isinstance(r, str) else r.convert(self.poly_ring) for r in relations]
            self.ideal = Ideal(rels, self.poly_ring)
            self.gb = self.ideal.groebner() if rels else GroebnerBasis(self.poly_ring, [])
            if self.gb.is_unit_ideal():
                raise ValueError("defining ideal is the unit ideal: the quotient is the zero ring")
        elif variables or list(relations):
            raise ValueError("only quotient rings take variables and relations")

    # constructors

    @classmethod
    def rationals(cls) -> "CoeffRing":
        return cls("rational", QQ)

    @classmethod
    def prime_field(cls, p: int) -> "CoeffRing":
        return cls("fp", PrimeField(p))

    @classmethod
    def of_field(cls, field: Field) -> "CoeffRing":
        return cls("rational", field) if field.characteristic == 0 else cls("fp", field)

    @classmethod
    def polynomial(cls, variables: Sequence[str], field: Field = QQ) -> "CoeffRing":
        return cls("quotient", field, variables, ())

    @classmethod
    def quotient(cls, variables: Sequence[str], relations: Iterable[Poly | str], field: Field = QQ) -> "CoeffRing":
        return cls("quotient", field, variables, relations)

    @classmethod
    def from_json(cls, data: Mapping) -> "CoeffRing":
        kind = data.get("type")
        if kind == "rational":
            return cls.rationals()
        if kind == "fp":
            return cls.prime_field(int(data["p"]))
        if kind == "quotient":
            base = data.get("field", {"type": "rational"})
            field = field_from_tag("q") if base.get("type") == "rational" else PrimeField(int(base["p"]))
            return cls.quotient(list(data["vars"]), list(data.get("ideal", [])), field)
        raise ValueError(f"unknown ring descriptor {data!r}")

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"type": "rational"}
        if self.kind == "fp":
            return {"type": "fp", "p": self.characteristic}
        out = {"type": "quotient", "vars": list(self.variables), "ideal": [format_poly(g) for g in self.ideal.gens]}
        if self.characteristic:
            out["field"] = {"type": "fp", "p": self.characteristic}
        return out

    # descriptors

    @property
    def is_field(self) -> bool:
        return self.kind != "quotient"

    @property
    def variables(self) -> tuple[str, ...]:
        return self.poly_ring.variables if self.poly_ring is not None else ()

    def _key(self):
        if self.kind != "quotient":
            return (self.kind, self.field)
        return (self.kind, self.field, self.variables, tuple(tuple(sorted(g.terms.items())) for g in self.gb.basis))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoeffRing) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return self.describe()

    def describe(self) -> str:
        if self.kind == "rational":
            return "QQ"
        if self.kind == "fp":
            return f"GF({self.characteristic})"
        base = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        ring = f"{base}[{','.join(self.variables)}]"
        if self.ideal.gens:
            ring += "/(" + ", ".join(format_poly(g) for g in self.ideal.gens) + ")"
        return ring

    # elements

    def _normalize(self, value):
        if self.kind == "quotient":
            if not isinstance(value, Poly):
                value = self.poly_ring.constant(value)
            elif value.ring != self.poly_ring:
                value = value.convert(self.poly_ring)
            return self.gb.reduce(value) if self.gb.basis else value
        return self.field(value)

    def __call__(self, x) -> "RingElem":
        if isinstance(x, RingElem):
            if x.ring == self:
                return x
            if x.ring.is_field and x.ring.field == self.field:
                return RingElem(self, self._normalize(x.value))
            raise ValueError(f"cannot coerce an element of {x.ring} into {self}")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Poly):
            if self.kind != "quotient":
                if x.is_constant():
                    return RingElem(self, self.field(x.constant_coeff()))
                raise ValueError(f"{x} is not a scalar of {self}")
            return RingElem(self, self._normalize(x))
        return RingElem(self, self._normalize(x))

    def parse(self, text: str) -> "RingElem":
        if self.kind == "quotient":
            return RingElem(self, self._normalize(parse_poly(text, self.poly_ring)))
        scratch = PolyRing((), self.field)
        return RingElem(self, self.field(parse_poly(text, scratch).constant_coeff()))

    @property
    def zero(self) -> "RingElem":
        return self(0)

    @property
    def one(self) -> "RingElem":
        return self(1)

    def gen(self, name: str) -> "RingElem":
        if self.kind != "quotient":
            raise ValueError(f"{self} has no generators")
        return RingElem(self, self._normalize(self.poly_ring.gen(name)))

    def gens(self) -> tuple["RingElem", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def adjoin(self, name: str, relation: str) -> "CoeffRing":
        """This ring with one more generator subject to ``relation``."""
        if name in self.variables:
            raise ValueError(f"{name!r} already names a generator")
        variables = list(self.variables) + [name]
        scratch = PolyRing(variables, self.field)
        rels = [g.convert(scratch) for g in self.ideal.gens] if self.kind == "quotient" else []
        rels.append(parse_poly(relation, scratch))
        return CoeffRing.quotient(variables, rels, self.field)

    def inclusion_into(self, target: "CoeffRing") -> "RingHom":
        return RingHom(self, target, {v: target.gen(v) for v in self.variables})


class RingElem:
    """An element of a :class:`CoeffRing` in canonical form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: CoeffRing, value):
        self.ring = ring
        self.value = value

    def _other(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, _RAW_SCALARS):
            return RingElem(self.ring, self.ring._normalize(other))
        return NotImplemented

    def _wrap(self, value) -> "RingElem":
        ring = self.ring
        if ring.kind == "quotient":
            return RingElem(ring, ring.gb.reduce(value) if ring.gb.basis else value)
        p = ring.characteristic
        return RingElem(ring, value % p if p else value)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if self.ring.kind == "quotient":
            return RingElem(self.ring, self.value + o.value)
        return self._wrap(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if self.ring.kind == "quotient":
            return RingElem(self.ring, self.value - o.value)
        return self._wrap(self.value - o.value)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        if self.ring.kind == "quotient":
            return RingElem(self.ring, -self.value)
        return self._wrap(-self.value)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * o.value)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElem):
            return self.ring == other.ring and self._cmp_value() == other._cmp_value()
        if isinstance(other, _RAW_SCALARS):
            return self == self._other(other)
        return NotImplemented

    def _cmp_value(self):
        if isinstance(self.value, Poly):
            return self.value.terms
        return self.value

    def __hash__(self) -> int:
        if isinstance(self.value, Poly):
            return hash(frozenset(self.value.terms.items()))
        return hash(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if isinstance(self.value, Poly):
            return format_poly(self.value)
        return self.ring.field.to_str(self.value)

    def __repr__(self) -> str:
        return f"RingElem({self}, {self.ring})"

    def to_poly(self) -> Poly:
        if isinstance(self.value, Poly):
            return self.value
        raise TypeError("field elements carry no polynomial")

    def is_constant(self) -> bool:
        return not isinstance(self.value, Poly) or self.value.is_constant()

    def constant_value(self):
        """The raw field scalar, for constant elements."""
        if not isinstance(self.value, Poly):
            return self.value
        if not self.value.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.value.constant_coeff()

    def is_unit(self) -> bool:
        return is_unit(self)

    def inverse(self) -> "RingElem":
        ring = self.ring
        if ring.is_field:
            return RingElem(ring, ring.field.inv(self.value))
        if self.value.is_constant() and not self.value.is_zero():
            return RingElem(ring, ring._normalize(ring.field.inv(self.value.constant_coeff())))
        # (I, x*t - 1) with t eliminated first: the basis contains t - x^-1
        name = "_inv"
        while name in ring.variables:
            name = "_" + name
        big = PolyRing((name,) + ring.variables, ring.field, MonomialOrder("block", 1))
        t = big.gen(name)
        gens = [g.convert(big) for g in ring.ideal.gens] + [self.value.convert(big) * t - 1]
        gb = buchberger(gens)
        if gb.is_unit_ideal():
            raise ZeroDivisionError(f"{self} is not a unit in {ring}")
        for g in gb.basis:
            exps = g.leading_exponents()
            if exps[0] == 1 and sum(exps) == 1:
                rest = t - g
                if name not in rest.variables_used():
                    return RingElem(ring, ring._normalize(rest.convert(ring.poly_ring)))
        raise ZeroDivisionError(f"{self} is not a unit in {ring}")


def ring_elem_arith(lhs: RingElem, rhs: RingElem, op: str) -> RingElem:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown operation {op!r}")


def is_unit(x: RingElem) -> bool:
    """``1`` lies in ``I + (x)``; over a field simply ``x != 0``."""
    ring = x.ring
    if ring.is_field:
        return not x.is_zero()
    if x.is_zero():
        return False
    if x.value.is_constant():
        return True
    if not ring.ideal.gens:
        return False
    return buchberger(list(ring.ideal.gens) + [x.value]).is_unit_ideal()


class RingHom:
    """A substitution homomorphism ``source -> target`` given on generators.

    Construction fails unless every defining relation of the source maps to 0.
    Prime-field targets of a rational source reduce coefficients mod p.
    """

    def __init__(self, source: CoeffRing, target: CoeffRing, images: Mapping[str, object]):
        self.source = source
        self.target = target
        if source.kind != "quotient":
            if images:
                raise ValueError("a field source has no generators to assign")
        self.images = {}
        for v in source.variables:
            if v not in images:
                raise ValueError(f"no image given for generator {v!r}")
            self.images[v] = target(images[v]) if not isinstance(images[v], RingElem) else images[v]
            if self.images[v].ring != target:
                raise ValueError(f"image of {v!r} lies outside {target}")
        extra = set(images) - set(source.variables)
        if extra:
            raise ValueError(f"unknown generators {sorted(extra)}")
        if source.characteristic != target.characteristic and source.characteristic != 0:
            raise ValueError("no coefficient map between these characteristics")
        if source.kind == "quotient":
            for g in source.ideal.gens:
                if not self._apply_poly(g).is_zero():
                    raise ValueError(f"relation {format_poly(g)} does not map to zero")

    def _scalar(self, c) -> RingElem:
        return self.target(c)

    def _apply_poly(self, f: Poly) -> RingElem:
        target = self.target
        if not f.terms:
            return target.zero
        if self.source.characteristic == 0 and target.characteristic:
            total = target.zero
            for c, exps in f.sorted_terms():
                term = target(c)
                for v, e in zip(self.source.variables, exps):
                    if e:
                        term = term * self.images[v] ** e
                total = total + term
            return total
        images = [self.images[v] for v in self.source.variables]
        return f.compose(images, target.one)

    def __call__(self, x: RingElem) -> RingElem:
        if isinstance(x, _RAW_SCALARS):
            return self.target(x)
        if x.ring != self.source:
            raise ValueError(f"element of {x.ring} is not in the source {self.source}")
        if self.source.is_field:
            return self.target(x.value)
        return self._apply_poly(x.value)

    @classmethod
    def identity(cls, ring: CoeffRing) -> "RingHom":
        return cls(ring, ring, {v: ring.gen(v) for v in ring.variables})


def apply_hom(h: RingHom, x: RingElem) -> RingElem:
    return h(x)


def sqrt_in_prime_field(value: int, p: int) -> int | None:
    """The smallest square root of ``value`` mod ``p``, if any."""
    value %= p
    for w in range(p):
        if w * w % p == value:
            return w
    return None
