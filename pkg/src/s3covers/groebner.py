"""Buchberger's algorithm and the ideal toolbox built on it.

The basis computation works directly on the packed-monomial dictionaries of
:mod:`s3covers.poly`.  Pairs are managed with the Gebauer-Moeller update
(which contains both Buchberger criteria) and selected by sugar degree, ties
broken by the lcm and then by element indices, so every run is deterministic.
"""

from __future__ import annotations

import heapq
import itertools
import time
from typing import Iterable, Sequence

from .poly import GREVLEX, Ideal, MonomialOrder, Poly, PolyRing


class GroebnerTimeout(RuntimeError):
    """Raised when a basis computation runs past its deadline."""


class GroebnerBasis:
    """A reduced, monic Groebner basis, sorted by descending leading monomial."""

    def __init__(self, ring: PolyRing, basis: Sequence[Poly], reduced: bool = True):
        self.ring = ring
        self.basis = list(basis)
        self.reduced = reduced
        self._elems = [_Elem.from_poly(g) for g in self.basis]

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and [g.terms for g in self.basis] == [g.terms for g in other.basis]

    def __repr__(self) -> str:
        return f"GroebnerBasis([{', '.join(str(g) for g in self.basis)}], order={self.order!r})"

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant() and not self.basis[0].is_zero()

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [g.leading_exponents() for g in self.basis]

    def reduce(self, f: Poly) -> Poly:
        if f.ring != self.ring:
            f = f.convert(self.ring)
        return Poly(self.ring, _normal_form(f.terms, self._elems, self.ring))

    def contains(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    def linear_forms(self) -> list[Poly]:
        return [g for g in self.basis if g.total_degree() == 1]


class _Elem:
    """A monic basis element: leading monomial plus tail as a list of (key, coeff)."""

    __slots__ = ("lm", "tail", "sugar")

    def __init__(self, lm: int, tail: list, sugar: int):
        self.lm = lm
        self.tail = tail
        self.sugar = sugar

    @classmethod
    def from_poly(cls, g: Poly, sugar: int | None = None) -> "_Elem":
        lm = g.lm()
        tail = sorted(((k, c) for k, c in g.terms.items() if k != lm), reverse=True)
        return cls(lm, tail, g.total_degree() if sugar is None else sugar)

    def terms(self, one) -> dict:
        d = dict(self.tail)
        d[self.lm] = one
        return d


def _normal_form(f: dict, elems: Sequence[_Elem], ring: PolyRing) -> dict:
    """Full remainder of ``f`` modulo monic ``elems`` (first divisor in list order wins)."""
    if not f or not elems:
        return dict(f)
    f = dict(f)
    p = ring.field.characteristic
    divides = ring.divides
    heap = [-k for k in f]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        m = -heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        for g in elems:
            if divides(g.lm, m):
                break
        else:
            rem[m] = c
            continue
        shift = m - g.lm
        get = f.get
        for k, gc in g.tail:
            k += shift
            old = get(k)
            if old is None:
                v = -c * gc
                if p:
                    v %= p
                f[k] = v
                heapq.heappush(heap, -k)
            else:
                v = old - c * gc
                if p:
                    v %= p
                if v:
                    f[k] = v
                else:
                    del f[k]
    return rem


def _spoly(g1: _Elem, g2: _Elem, lcm: int, ring: PolyRing) -> dict:
    p = ring.field.characteristic
    s1 = lcm - g1.lm
    s2 = lcm - g2.lm
    out = {k + s1: c for k, c in g1.tail}
    get = out.get
    for k, c in g2.tail:
        k += s2
        v = get(k, 0) - c
        if p:
            v %= p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _make_monic(terms: dict, ring: PolyRing) -> dict:
    lm = max(terms)
    c = terms[lm]
    if c == 1:
        return terms
    field = ring.field
    inv = field.inv(c)
    p = field.characteristic
    if p:
        return {k: v * inv % p for k, v in terms.items()}
    return {k: v * inv for k, v in terms.items()}


def _as_polys(gens: Ideal | Iterable[Poly], ring: PolyRing | None = None) -> tuple[PolyRing, list[Poly]]:
    if isinstance(gens, Ideal):
        return gens.ring, list(gens.gens)
    polys = list(gens)
    if ring is None:
        if not polys:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = polys[0].ring
    return ring, polys


def buchberger(
    gens: Ideal | Iterable[Poly],
    order: MonomialOrder | None = None,
    deadline: float | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of ``gens`` for ``order`` (default: the ring's own).

    ``deadline`` is an absolute :func:`time.monotonic` value; passing it makes
    the computation raise :class:`GroebnerTimeout` once exceeded.
    """
    base_ring, polys = _as_polys(gens)
    if base_ring.nvars == 0 and not polys:
        raise ValueError("empty ambient ring")
    ring = base_ring.with_order(order) if order is not None and order != base_ring.order else base_ring
    field = ring.field
    one = field.one
    divides = ring.divides
    lcm_of = ring.lcm
    mdeg = ring.mdegree

    elems: list[_Elem] = []
    for f in polys:
        f = f.convert(ring) if f.ring != ring else f
        if f.terms:
            elems.append(_Elem.from_poly(Poly(ring, _make_monic(dict(f.terms), ring))))
    if not elems:
        return GroebnerBasis(ring, [])
    if any(e.lm == ring.one_key for e in elems):
        return GroebnerBasis(ring, [ring.one()])

    # inputs are fed in ascending order of leading monomial, which keeps
    # early reductions cheap and makes the run independent of input order
    # up to ties (ties keep their given order)
    pending = sorted(range(len(elems)), key=lambda i: elems[i].lm)
    basis_elems: list[_Elem] = []
    live: list[int] = []  # indices into basis_elems forming the current G
    pairs: dict[tuple[int, int], int] = {}
    heap: list = []
    counter = itertools.count()

    def add_pair(i: int, j: int) -> None:
        gi, gj = basis_elems[i], basis_elems[j]
        l = lcm_of(gi.lm, gj.lm)
        d = mdeg(l)
        sugar = max(gi.sugar + d - mdeg(gi.lm), gj.sugar + d - mdeg(gj.lm))
        pairs[(i, j)] = l
        heapq.heappush(heap, (sugar, l, i, j))

    def update(h: int) -> None:
        nonlocal live
        hl = basis_elems[h].lm
        cand = [(g, lcm_of(hl, basis_elems[g].lm)) for g in live]
        kept: list[tuple[int, int]] = []
        for idx, (g1, l1) in enumerate(cand):
            if ring.coprime(hl, basis_elems[g1].lm):
                kept.append((g1, l1))
                continue
            dominated = False
            for g2, l2 in cand[idx + 1 :]:
                if divides(l2, l1):
                    dominated = True
                    break
            if not dominated:
                for g2, l2 in kept:
                    if divides(l2, l1):
                        dominated = True
                        break
            if not dominated:
                kept.append((g1, l1))
        new_pairs = [(g, l) for g, l in kept if not ring.coprime(hl, basis_elems[g].lm)]
        # chain criterion on old pairs
        for (i, j), l in list(pairs.items()):
            if divides(hl, l) and lcm_of(basis_elems[i].lm, hl) != l and lcm_of(basis_elems[j].lm, hl) != l:
                del pairs[(i, j)]
        for g, _ in new_pairs:
            add_pair(min(g, h), max(g, h))
        live = [g for g in live if not divides(hl, basis_elems[g].lm)] + [h]

    def insert(e: _Elem) -> None:
        basis_elems.append(e)
        update(len(basis_elems) - 1)

    def current() -> list[_Elem]:
        return [basis_elems[g] for g in live]

    for i in pending:
        e = elems[i]
        red = _normal_form(e.terms(one), current(), ring)
        if red:
            red = _make_monic(red, ring)
            if ring.one_key in red and len(red) == 1:
                return GroebnerBasis(ring, [ring.one()])
            insert(_Elem.from_poly(Poly(ring, red), sugar=e.sugar))

    steps = 0
    while heap:
        sugar, l, i, j = heapq.heappop(heap)
        if pairs.get((i, j)) != l:
            continue
        del pairs[(i, j)]
        steps += 1
        if deadline is not None and steps % 4 == 0 and time.monotonic() > deadline:
            raise GroebnerTimeout(f"Groebner basis not finished after {steps} pair reductions")
        s = _spoly(basis_elems[i], basis_elems[j], l, ring)
        if not s:
            continue
        red = _normal_form(s, current(), ring)
        if not red:
            continue
        red = _make_monic(red, ring)
        if ring.one_key in red and len(red) == 1:
            return GroebnerBasis(ring, [ring.one()])
        insert(_Elem.from_poly(Poly(ring, red), sugar=sugar))

    minimal = sorted(current(), key=lambda e: e.lm, reverse=True)
    reduced: list[Poly] = []
    for idx, e in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = _normal_form(dict(e.tail), others, ring)
        tail[e.lm] = one
        reduced.append(Poly(ring, tail))
    return GroebnerBasis(ring, reduced, reduced=True)


def groebner_basis(gens: Ideal | Iterable[Poly], order: MonomialOrder | None = None, deadline: float | None = None) -> GroebnerBasis:
    """Like :func:`buchberger`, but uses and fills the cache of an :class:`Ideal`."""
    if isinstance(gens, Ideal):
        return gens.groebner(order, deadline=deadline)
    return buchberger(gens, order, deadline=deadline)


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    return gb.reduce(f)


def ideal_membership(f: Poly, gens: Ideal | Iterable[Poly]) -> bool:
    if f.is_zero():
        return True
    return groebner_basis(gens).contains(f)


def ideal_contains(big: Ideal | Iterable[Poly], small: Ideal | Iterable[Poly]) -> bool:
    """Whether every generator of ``small`` lies in ``big``."""
    gb = groebner_basis(big)
    _, polys = _as_polys(small, gb.ring)
    return all(gb.contains(g) for g in polys)


def ideal_equal(lhs: Ideal | Iterable[Poly], rhs: Ideal | Iterable[Poly]) -> bool:
    ring_l, _ = _as_polys(lhs)
    ring_r, _ = _as_polys(rhs, ring_l)
    if ring_l.variables != ring_r.variables or ring_l.field != ring_r.field:
        raise ValueError("ideals live in different ambient rings")
    order = ring_l.order
    gl = groebner_basis(lhs, order)
    gr = groebner_basis(rhs, order)
    return gl == gr


def _extended_ring(ring: PolyRing, extra: str, order: MonomialOrder) -> PolyRing:
    name = extra
    while name in ring.index:
        name = "_" + name
    return PolyRing((name,) + ring.variables, ring.field, order)


def elimination_ideal(gens: Ideal | Iterable[Poly], drop: Iterable[str], deadline: float | None = None) -> Ideal:
    """Generators of the ideal intersected with the subring free of ``drop``."""
    ring, polys = _as_polys(gens)
    drop = list(dict.fromkeys(drop))
    for v in drop:
        if v not in ring.index:
            raise ValueError(f"unknown variable {v!r}")
    keep = [v for v in ring.variables if v not in drop]
    elim_ring = PolyRing(drop + keep, ring.field, MonomialOrder("block", len(drop)))
    gb = buchberger([g.convert(elim_ring) for g in polys], deadline=deadline) if polys else GroebnerBasis(elim_ring, [])
    target = PolyRing(keep, ring.field, ring.order)
    out = [g.convert(target) for g in gb.basis if not (g.variables_used() & set(drop))]
    return Ideal(out, target)


def ideal_sum(lhs: Ideal | Iterable[Poly], rhs: Ideal | Iterable[Poly]) -> Ideal:
    ring, a = _as_polys(lhs)
    _, b = _as_polys(rhs, ring)
    return Ideal(a + [g.convert(ring) for g in b], ring)


def ideal_intersection(lhs: Ideal | Iterable[Poly], rhs: Ideal | Iterable[Poly], deadline: float | None = None) -> Ideal:
    """``(t*lhs, (1-t)*rhs)`` with ``t`` eliminated."""
    ring, a = _as_polys(lhs)
    _, b = _as_polys(rhs, ring)
    big = _extended_ring(ring, "_t", MonomialOrder("block", 1))
    t = big.gen(big.variables[0])
    gens = [t * g.convert(big) for g in a] + [(1 - t) * g.convert(big) for g in b]
    gb = buchberger(gens, deadline=deadline) if gens else GroebnerBasis(big, [])
    out = [g.convert(ring) for g in gb.basis if big.variables[0] not in g.variables_used()]
    return Ideal(out, ring)


def radical_membership(f: Poly, gens: Ideal | Iterable[Poly], deadline: float | None = None) -> bool:
    """Rabinowitsch: ``f`` is in the radical iff ``1`` is in ``(gens, 1 - t*f)``."""
    ring, polys = _as_polys(gens, f.ring)
    if f.is_zero():
        return True
    big = _extended_ring(ring, "_t", ring.order if ring.order.kind != "lex" else GREVLEX)
    t = big.gen(big.variables[0])
    gens2 = [g.convert(big) for g in polys] + [1 - t * f.convert(big)]
    return buchberger(gens2, deadline=deadline).is_unit_ideal()


def krull_dimension(gens: Ideal | Iterable[Poly]) -> int:
    """Largest set of variables containing the support of no leading monomial."""
    gb = groebner_basis(gens)
    if gb.is_unit_ideal():
        raise ValueError("the unit ideal has an empty variety; dimension is undefined")
    n = gb.ring.nvars
    supports = [frozenset(i for i, e in enumerate(exps) if e) for exps in gb.leading_exponents()]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0
