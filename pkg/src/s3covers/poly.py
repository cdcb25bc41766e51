"""Sparse multivariate polynomials over QQ or GF(p).

Monomials are packed into a single Python ``int`` per ring.  The packing is
chosen per monomial order so that

* comparing two packed monomials as integers compares them in the order,
* multiplying monomials is ``m1 + m2 - ring.one_key``,
* ``m2 / m1`` (when it divides) is ``m2 - m1 + ring.one_key``.

Each exponent occupies a 16-bit field whose top bit is a guard bit, which is
what makes the divisibility test a single subtraction and mask.  Orders that
compare exponents "reversed" (grevlex and the grevlex blocks of an
elimination order) store ``CAP - e`` instead of ``e``; degree fields sit
above the exponent fields they summarize.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .exactnum import QQ, Field, PrimeField, PrimeFieldElem, RationalField, format_rational

WIDTH = 16
GUARD = 1 << (WIDTH - 1)
CAP = GUARD - 1
_FIELD_MASK = (1 << WIDTH) - 1


class MonomialOrder:
    """``lex``, ``grevlex`` or ``block(k)``.

    ``block(k)`` compares the first ``k`` variables by grevlex and breaks ties
    with grevlex on the remaining ones; it eliminates the first block.
    """

    __slots__ = ("kind", "split")

    def __init__(self, kind: str = "grevlex", split: int | None = None):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and (split is None or split < 0):
            raise ValueError("block order needs a non-negative split index")
        self.kind = kind
        self.split = split if kind == "block" else None

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        text = text.strip().lower()
        m = re.fullmatch(r"block\((\d+)\)", text)
        if m:
            return cls("block", int(m.group(1)))
        return cls(text)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self) -> int:
        return hash((self.kind, self.split))

    def __repr__(self) -> str:
        return f"block({self.split})" if self.kind == "block" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


class PolyRing:
    """``field[variables]`` with a fixed monomial order."""

    def __init__(self, variables: Sequence[str], field: Field = QQ, order: MonomialOrder = GREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not _IDENT_RE.fullmatch(v):
                raise ValueError(f"invalid variable name {v!r}")
        self.variables = variables
        self.nvars = len(variables)
        self.field = field
        self.order = order
        self.index = {v: i for i, v in enumerate(variables)}
        self._build_layout()

    def _build_layout(self) -> None:
        n = self.nvars
        kind = self.order.kind
        # shifts[i]: bit offset of variable i; degree_fields: (shift, lo, hi)
        shifts = [0] * n
        degree_fields: list[tuple[int, int, int]] = []
        if kind == "lex":
            for i in range(n):
                shifts[i] = WIDTH * (n - 1 - i)
            complemented = False
        elif kind == "grevlex":
            for i in range(n):
                shifts[i] = WIDTH * i
            degree_fields.append((WIDTH * n, 0, n))
            complemented = True
        else:
            k = min(self.order.split, n)
            pos = 0
            for i in range(k, n):
                shifts[i] = WIDTH * pos
                pos += 1
            degree_fields.append((WIDTH * pos, k, n))
            pos += 1
            for i in range(k):
                shifts[i] = WIDTH * pos
                pos += 1
            degree_fields.append((WIDTH * pos, 0, k))
            complemented = True
        self._shifts = shifts
        self._degree_fields = degree_fields
        self._complemented = complemented
        self._var_mask = sum(_FIELD_MASK << s for s in shifts)
        self._guard = sum(GUARD << s for s in shifts)
        self.one_key = self._pack_raw((0,) * n)

    def _pack_raw(self, exps: Sequence[int]) -> int:
        key = 0
        for e, s in zip(exps, self._shifts):
            if e < 0 or e > CAP:
                raise OverflowError(f"exponent {e} out of range")
            key |= ((CAP - e) if self._complemented else e) << s
        for s, lo, hi in self._degree_fields:
            key += sum(exps[lo:hi]) << s
        return key

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        return self._pack_raw(exps)

    def unpack(self, key: int) -> tuple[int, ...]:
        if self._complemented:
            return tuple(CAP - ((key >> s) & _FIELD_MASK) for s in self._shifts)
        return tuple((key >> s) & _FIELD_MASK for s in self._shifts)

    def divides(self, m1: int, m2: int) -> bool:
        """Whether monomial ``m1`` divides ``m2``."""
        vm = self._var_mask
        g = self._guard
        if self._complemented:
            return (((m1 & vm) | g) - (m2 & vm)) & g == g
        return ((m2 | g) - m1) & g == g

    def lcm(self, m1: int, m2: int) -> int:
        return self._pack_raw([max(a, b) for a, b in zip(self.unpack(m1), self.unpack(m2))])

    def coprime(self, m1: int, m2: int) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.unpack(m1), self.unpack(m2)))

    def mdegree(self, m: int) -> int:
        return sum(self.unpack(m))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.field, self.order))

    def __repr__(self) -> str:
        return f"PolyRing({list(self.variables)}, {self.field!r}, {self.order!r})"

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def with_variables(self, variables: Sequence[str], order: MonomialOrder | None = None) -> "PolyRing":
        return PolyRing(variables, self.field, order or self.order)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.variables, field, self.order)

    # construction helpers

    def scalar(self, c) -> object:
        if isinstance(c, Poly):
            raise TypeError("expected a scalar")
        return self.field(c)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self.one_key: self.field.one})

    def constant(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {self.one_key: c} if c else {})

    def gen(self, name: str) -> "Poly":
        exps = [0] * self.nvars
        try:
            exps[self.index[name]] = 1
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self.variables}") from None
        return Poly(self, {self._pack_raw(exps): self.field.one})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        c = self.field(coeff)
        return Poly(self, {self.pack(exps): c} if c else {})

    def from_dict(self, data: Mapping[tuple[int, ...], object]) -> "Poly":
        terms = {}
        for exps, c in data.items():
            c = self.field(c)
            if c:
                k = self.pack(exps)
                v = terms.get(k, self.field.zero) + c
                if self.field.characteristic:
                    v %= self.field.characteristic
                if v:
                    terms[k] = v
                else:
                    terms.pop(k, None)
        return Poly(self, terms)

    def __call__(self, x) -> "Poly":
        if isinstance(x, Poly):
            return x.convert(self)
        if isinstance(x, str):
            return parse_poly(x, self)
        return self.constant(x)

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)


def _reduce_coeff(field: Field, c):
    p = field.characteristic
    return c % p if p else c


class Poly:
    """An immutable sparse polynomial: a ``{packed monomial: coefficient}`` map."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def lm(self) -> int:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms)
        return self._lm

    def lc(self):
        return self.terms[self.lm()]

    def leading_exponents(self) -> tuple[int, ...]:
        return self.ring.unpack(self.lm())

    def sorted_terms(self) -> list[tuple[object, tuple[int, ...]]]:
        """Terms as ``(coefficient, exponents)`` in strictly descending order."""
        return [(self.terms[k], self.ring.unpack(k)) for k in sorted(self.terms, reverse=True)]

    def __iter__(self) -> Iterator[tuple[object, tuple[int, ...]]]:
        return iter(self.sorted_terms())

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.mdegree(k) for k in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.mdegree(k) for k in self.terms}) <= 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.one_key in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring.one_key, self.ring.field.zero)

    def variables_used(self) -> set[str]:
        used = set()
        for k in self.terms:
            for v, e in zip(self.ring.variables, self.ring.unpack(k)):
                if e:
                    used.add(v)
        return used

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(self.ring.pack(exps), self.ring.field.zero)

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ambient ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        p = self.ring.field.characteristic
        for k, c in other.terms.items():
            v = terms.get(k, 0) + c
            if p:
                v %= p
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = self.ring.field.characteristic
        if p:
            return Poly(self.ring, {k: (-c) % p for k, c in self.terms.items()})
        return Poly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.field.characteristic
        if p:
            return Poly(self.ring, {k: v * c % p for k, v in self.terms.items()})
        return Poly(self.ring, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self.terms) > len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        one = self.ring.one_key
        p = self.ring.field.characteristic
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            shift = kb - one
            for ka, ca in a.items():
                k = ka + shift
                out[k] = get(k, 0) + ca * cb
        if p:
            out = {k: v % p for k, v in out.items() if v % p}
        else:
            out = {k: v for k, v in out.items() if v}
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers of polynomials are undefined")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.scale(self.ring.field.inv(self.ring.field(other)))
        return NotImplemented

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def mul_term(self, exps: Sequence[int], c=1) -> "Poly":
        return self * self.ring.monomial(exps, c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    # calculus and substitution

    def diff(self, var: str) -> "Poly":
        i = self.ring.index[var]
        p = self.ring.field.characteristic
        out = {}
        for k, c in self.terms.items():
            exps = list(self.ring.unpack(k))
            e = exps[i]
            if e == 0:
                continue
            exps[i] = e - 1
            v = c * e
            if p:
                v %= p
            if v:
                out[self.ring.pack(exps)] = v
        return Poly(self.ring, out)

    def compose(self, images: Sequence[object], one: object | None = None) -> object:
        """Substitute ``images[i]`` for variable ``i``.

        The images can be anything closed under ``+`` and ``*`` with scalars:
        polynomials of another ring, :class:`~s3covers.qring.RingElem`,
        field scalars.  ``one`` is the multiplicative identity of the target;
        it defaults to ``images[0] ** 0`` when images exist.
        """
        if len(images) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} images, got {len(images)}")
        if one is None:
            if not images:
                raise ValueError("cannot infer the target identity without images")
            one = images[0] ** 0
        powers: list[dict[int, object]] = [{0: one, 1: img} for img in images]

        def power(i: int, e: int):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e // 2) * power(i, e - e // 2)
            return cache[e]

        total = one * 0
        for k, c in self.terms.items():
            term = one * _scalar_out(self.ring.field, c)
            for i, e in enumerate(self.ring.unpack(k)):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def subs(self, assignment: Mapping[str, object]) -> "Poly":
        """Substitute polynomials or scalars for some variables, staying in this ring."""
        images = []
        for v in self.ring.variables:
            img = assignment.get(v, None)
            if img is None:
                images.append(self.ring.gen(v))
            elif isinstance(img, Poly):
                images.append(img.convert(self.ring) if img.ring != self.ring else img)
            elif isinstance(img, str):
                images.append(parse_poly(img, self.ring))
            else:
                images.append(self.ring.constant(img))
        return self.compose(images, self.ring.one())

    def evaluate(self, point: Mapping[str, object] | Sequence[object]):
        """Evaluate at a point of the coefficient field; returns a raw field scalar."""
        field = self.ring.field
        if isinstance(point, Mapping):
            values = [field(point[v]) for v in self.ring.variables]
        else:
            values = [field(x) for x in point]
        p = field.characteristic
        total = field.zero
        for k, c in self.terms.items():
            t = c
            for x, e in zip(values, self.ring.unpack(k)):
                if e:
                    t = t * (pow(x, e, p) if p else x**e)
            total = total + t
        return total % p if p else total

    def convert(self, ring: PolyRing) -> "Poly":
        """Re-express in ``ring`` (same field; variables matched by name)."""
        if ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise ValueError(f"field mismatch: {self.ring.field!r} vs {ring.field!r}")
        positions = []
        for i, v in enumerate(self.ring.variables):
            positions.append(ring.index.get(v))
        out = {}
        for k, c in self.terms.items():
            exps = [0] * ring.nvars
            for i, e in enumerate(self.ring.unpack(k)):
                if e:
                    j = positions[i]
                    if j is None:
                        raise ValueError(f"variable {self.ring.variables[i]!r} is missing from the target ring")
                    exps[j] = e
            out[ring.pack(exps)] = c
        return Poly(ring, out)

    # printing

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _scalar_out(field: Field, c):
    """A raw field value as something that mixes with RingElem/Poly arithmetic."""
    return c


# text format

_IDENT_RE = re.compile(r"[^\W\d]\w*")
_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[^\W\d]\w*)|(?P<op>[-+*/^()]))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str) -> PolySyntaxError:
        return PolySyntaxError(message, self.text, self.peek()[2])

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        result = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return result

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Poly:
        result = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            if op == "*":
                result = result * self.factor()
            else:
                kind, value, pos = self.peek()
                rhs = self.factor()
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolySyntaxError("division only by non-zero constants", self.text, pos)
                result = result / Fraction(rhs.constant_coeff()) if not self.ring.field.characteristic else result / rhs.constant_coeff()
        return result

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "num":
                raise PolySyntaxError("exponent must be a non-negative integer", self.text, pos)
            return base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.take()
        if kind == "num":
            return self.ring.constant(int(value))
        if kind == "name":
            if value not in self.ring.index:
                raise PolySyntaxError(f"unknown variable {value!r}", self.text, pos)
            return self.ring.gen(value)
        if kind == "op" and value == "(":
            inner = self.expr()
            kind, value, pos = self.take()
            if value != ")":
                raise PolySyntaxError("expected ')'", self.text, pos)
            return inner
        if kind == "op" and value == "-":
            return -self.factor()
        raise PolySyntaxError(f"unexpected token {value!r}", self.text, pos)


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse ``"2*a*A + b*B - 3/2*c^2"``-style text into ``ring``."""
    return _Parser(text, ring).parse()


def _format_monomial(ring: PolyRing, exps: Sequence[int]) -> str:
    parts = []
    for v, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    field = f.ring.field
    p = field.characteristic
    pieces = []
    for c, exps in f.sorted_terms():
        negative = False
        if p:
            # print the representative in (-p/2, p/2]
            if c > p // 2:
                c = c - p
        if c < 0:
            negative = True
            c = -c
        mono = _format_monomial(f.ring, exps)
        cs = format_rational(Fraction(c)) if not p else str(c)
        if not mono:
            body = cs
        elif c == 1:
            body = mono
        else:
            body = f"{cs}*{mono}"
        pieces.append(("-" if negative else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ideals


class Ideal:
    """A generator list plus cached reduced Groebner bases, one per monomial order.

    The cache is guarded by a lock so concurrent readers can share an ideal.
    """

    def __init__(self, gens: Iterable[Poly], ring: PolyRing | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit ring")
            ring = gens[0].ring
        self.ring = ring
        self.gens = [g.convert(ring) if g.ring != ring else g for g in gens]
        self._bases: dict = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"Ideal([{', '.join(str(g) for g in self.gens)}])"

    def __len__(self) -> int:
        return len(self.gens)

    def __add__(self, other: "Ideal | Iterable[Poly]") -> "Ideal":
        extra = other.gens if isinstance(other, Ideal) else list(other)
        return Ideal(self.gens + [g.convert(self.ring) for g in extra], self.ring)

    def cached_basis(self, order: MonomialOrder):
        with self._lock:
            return self._bases.get(order)

    def store_basis(self, order: MonomialOrder, gb) -> None:
        from .groebner import normal_form

        for g in self.gens:
            if not normal_form(g.convert(gb.ring), gb).is_zero():
                raise ValueError("basis does not contain the generators of this ideal")
        with self._lock:
            self._bases.setdefault(order, gb)

    def groebner(self, order: MonomialOrder | None = None, deadline: float | None = None):
        from .groebner import buchberger

        order = order or self.ring.order
        gb = self.cached_basis(order)
        if gb is None:
            gb = buchberger(self, order, deadline=deadline)
            with self._lock:
                gb = self._bases.setdefault(order, gb)
        return gb

    def to_text(self) -> str:
        lines = [f"vars: {' '.join(self.ring.variables)}"]
        lines.extend(format_poly(g) for g in self.gens)
        return "\n".join(lines) + "\n"


def read_ideal_text(text: str, field: Field = QQ, order: MonomialOrder = GREVLEX) -> Ideal:
    """Parse an ideal file: a ``vars:`` header, ``#`` comments, one polynomial per line."""
    ring = None
    gens: list[Poly] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("vars:"):
            if ring is not None:
                raise ValueError(f"line {lineno}: duplicate vars header")
            names = line[5:].replace(",", " ").split()
            if not names:
                raise ValueError(f"line {lineno}: empty vars header")
            ring = PolyRing(names, field, order)
            continue
        if ring is None:
            raise ValueError(f"line {lineno}: polynomial before the 'vars:' header")
        try:
            gens.append(parse_poly(line, ring))
        except PolySyntaxError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if ring is None:
        raise ValueError("ideal file has no 'vars:' header")
    return Ideal(gens, ring)
