from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s3covers.covers import relation_residuals, u_alpha_family, u_beta_family, z2_family
from s3covers.qring import CoeffRing, RingHom, apply_hom, is_unit, sqrt_in_prime_field

QW = CoeffRing.quotient(["w"], ["w^2+3"])


def test_arithmetic_examples():
    w = QW.gen("w")
    assert w * w == QW(-3)
    x = CoeffRing.polynomial(["x"]).gen("x")
    assert x.ring.one * x == x
    S = CoeffRing.quotient(["x"], ["x^2"])
    assert (S.gen("x") * S.gen("x")).is_zero()


def test_units():
    assert is_unit(CoeffRing.rationals()(Fraction(1, 2)))
    w = QW.gen("w")
    assert is_unit(w)
    assert w.inverse() == -w / 3
    assert w * w.inverse() == QW.one
    m = CoeffRing.polynomial(["m", "a", "b"]).gen("m")
    assert not is_unit(m)
    with pytest.raises(ZeroDivisionError):
        m.inverse()
    S = CoeffRing.quotient(["x"], ["x^2"])
    assert is_unit(1 + S.gen("x")) and (1 + S.gen("x")).inverse() == 1 - S.gen("x")


def test_unit_ideal_rejected():
    with pytest.raises(ValueError):
        CoeffRing.quotient(["x"], ["x", "x - 1"])


def test_json_round_trip():
    for R in (CoeffRing.rationals(), CoeffRing.prime_field(7), QW, CoeffRing.quotient(["t"], ["t^3-1"], CoeffRing.prime_field(5).field)):
        assert CoeffRing.from_json(json.loads(json.dumps(R.to_json()))) == R


def test_u_alpha_specialization_over_f7():
    fam = u_alpha_family()
    F7 = CoeffRing.prime_field(7)
    h = RingHom(fam.ring, F7, {"m": 1, "a": 0, "b": 1})
    chi = fam.map(h)
    p = {k: int(v.constant_value()) for k, v in chi.params().items()}
    # c = -mb, d = -a, e = ma, f = mb, omega = mb^2 - a^2, B = m, C = 1
    assert p == dict(a=0, b=1, c=6, d=0, e=0, f=1, A=0, B=1, C=1, D=0, omega=1)
    assert all(r.is_zero() for r in relation_residuals(chi))


def test_identity_and_evaluation_homs():
    fam = z2_family()
    ident = RingHom.identity(fam.ring)
    assert all(apply_hom(ident, v) == v for v in fam.params().values())
    Q = CoeffRing.rationals()
    zero = fam.map(RingHom(fam.ring, Q, {"A": 0}))
    assert all(v.is_zero() for v in zero.params().values())


def test_hom_must_respect_relations():
    F7 = CoeffRing.prime_field(7)
    with pytest.raises(ValueError):
        RingHom(QW, F7, {"w": 1})
    assert RingHom(QW, F7, {"w": 2})(QW.gen("w") ** 2) == F7(-3)
    assert sqrt_in_prime_field(-3, 7) == 2 and sqrt_in_prime_field(3, 7) is None


@pytest.mark.parametrize("family", [u_alpha_family, u_beta_family, z2_family])
def test_homs_preserve_relations(family):
    fam = family()
    F7 = CoeffRing.prime_field(7)
    rng = random.Random(3)
    for _ in range(10):
        h = RingHom(fam.ring, F7, {v: rng.randrange(7) for v in fam.ring.variables})
        assert all(r.is_zero() for r in relation_residuals(fam.map(h)))


elems = st.tuples(st.fractions(max_denominator=5, min_value=-9, max_value=9), st.fractions(max_denominator=5, min_value=-9, max_value=9)).map(
    lambda t: QW(t[0]) + QW(t[1]) * QW.gen("w")
)


@given(elems, elems, elems)
def test_quotient_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(elems, elems)
def test_units_closed_under_products(x, y):
    # QQ[w]/(w^2+3) is a field: every non-zero element is a unit
    if is_unit(x) and is_unit(y):
        assert is_unit(x * y)
        assert (x * y).inverse() == x.inverse() * y.inverse()
    assert is_unit(x) == (not x.is_zero())


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_units_closed_in_square_zero_quotient(a, b, c, d):
    R = CoeffRing.quotient(["x"], ["x^2"], CoeffRing.prime_field(5).field)
    x, y = R(a) + R(b) * R.gen("x"), R(c) + R(d) * R.gen("x")
    assert is_unit(x) == (a % 5 != 0)
    if is_unit(x) and is_unit(y):
        assert is_unit(x * y)
